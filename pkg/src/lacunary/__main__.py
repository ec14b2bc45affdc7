import sys

from lacunary.cli.main import main

sys.exit(main())
