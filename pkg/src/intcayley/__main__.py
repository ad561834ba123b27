import sys

from intcayley.cli import main

sys.exit(main())
