import sys

from hypergroup_amalgam.cli import main

sys.exit(main())
