from ctab.cli import main
import sys

sys.exit(main())
