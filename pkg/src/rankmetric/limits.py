"""Desk-scale guards shared by the enumeration-heavy operations."""

# Largest F_q-span / ambient space that exhaustive enumeration will walk.
SPAN_ENUMERATION_LIMIT = 2**24

# Largest explicit (non-linear) codeword list that sampling will build.
EXPLICIT_CODE_LIMIT = 2**20

# Largest field order for which log/exp multiplication tables are built.
FIELD_TABLE_LIMIT = 2**16


class GuardExceeded(RuntimeError):
    """A computation was refused because it exceeds a desk-scale guard."""
