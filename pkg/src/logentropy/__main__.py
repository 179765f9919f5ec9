import sys

from logentropy.cli import main

sys.exit(main())
