# Integration Tests
#
# End-to-end tests running the rigidcover command line.
