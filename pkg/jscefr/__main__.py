import sys

from jscefr.main import main

sys.exit(main())
