import sys

from scatkit.main import main

sys.exit(main())
