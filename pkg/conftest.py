"""Pytest wiring: configure Django the way manage.py does before tests run."""

import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'spectra_django.settings')
django.setup()
