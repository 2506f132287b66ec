# Unit Tests
#
# Unit tests for rigidcover components.
