import sys

from spoofperfect.cli import main

sys.exit(main())
