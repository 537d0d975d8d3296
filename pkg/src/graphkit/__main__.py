from graphkit.cli import main
import sys

sys.exit(main())
