"""Python module entry point

Supports running the CLI using `python3 -m rigidcover`.
"""

from rigidcover.main import main
import sys

if __name__ == '__main__':
    sys.exit(main())
