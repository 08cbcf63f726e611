import sys

from pampo.cli import main

sys.exit(main())
