# Test Suite for rigidcover
#
# This package contains the complete test suite for the rigidcover project.
#
# Running Tests:
#     python -m tests                    # Run all tests
#     python -m tests --verbose          # Run with verbose output
#     python -m tests unit               # Run only unit tests
#     python -m tests integration        # Run only integration tests
#     pytest tests/unit/test_rank.py     # Run specific test file
#
# Generating Coverage:
#     python -m tests --coverage
