"""`python -m kenstat` runs the command-line tool"""

from __future__ import absolute_import

import sys

from kenstat import main


sys.exit(main())
