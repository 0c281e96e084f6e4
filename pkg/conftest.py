"""Configure Django so pytest can collect the SimpleTestCase suites (same settings as manage.py)."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
django.setup()
