# Test Fixtures
#
# Shared polytope, colouring, state and config builders.
