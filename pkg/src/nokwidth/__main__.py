import sys

from nokwidth.cli.main import main

sys.exit(main())
