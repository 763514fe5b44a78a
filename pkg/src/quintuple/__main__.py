import sys

from quintuple.cli import main

sys.exit(main())
