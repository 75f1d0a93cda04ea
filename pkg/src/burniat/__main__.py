import sys

from burniat.cli import main

sys.exit(main())
