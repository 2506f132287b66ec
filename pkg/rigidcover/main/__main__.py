"""Main module entry point

Allows running the CLI with: python3 -m rigidcover.main
"""

import sys

from rigidcover.main import main

if __name__ == '__main__':
    sys.exit(main())
