import sys

from liftcover.cli import main

sys.exit(main())
