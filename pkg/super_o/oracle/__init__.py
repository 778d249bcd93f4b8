"""
Brute-force oracle: weight-truncated modules with exact rational actions.

The verification suites live in `super_o.oracle.suites`; they are not imported
here because they depend on the formula modules built on top of the oracle.
"""
