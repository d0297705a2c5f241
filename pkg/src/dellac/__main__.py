import sys

from dellac.cli import main

sys.exit(main())
