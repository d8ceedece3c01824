import sys

from horadam.cli import main

sys.exit(main())
