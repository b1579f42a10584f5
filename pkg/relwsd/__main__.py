## \file relwsd/__main__.py
# -*- coding: utf-8 -*-
import sys

from relwsd.cli.main import main

sys.exit(main())
