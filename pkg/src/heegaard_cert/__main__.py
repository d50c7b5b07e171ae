import sys

from heegaard_cert.cli import main

sys.exit(main())
