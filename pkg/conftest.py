import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "qrf.settings")
django.setup()
