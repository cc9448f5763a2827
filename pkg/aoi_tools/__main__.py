import sys

from aoi_tools.cli.main import main

sys.exit(main())
