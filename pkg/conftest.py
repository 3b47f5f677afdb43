import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

# no per-example deadline
settings.register_profile("flagphase", deadline=None)
settings.load_profile("flagphase")
