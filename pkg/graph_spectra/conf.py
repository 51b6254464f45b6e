"""
Access to the SPECTRA settings dictionary.

Services read their defaults through toolkit_setting() so they keep working
when imported outside manage.py (no DJANGO_SETTINGS_MODULE configured).
"""

from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'VERTEX_CAP': 64,
    'GRAPH6_MAX_ORDER': 62,
    'CONNECTED_MAX_N': 8,
    'CONNECTED_OPT_IN_MAX_N': 9,
    'TREES_MAX_N': 12,
    'CATERPILLAR_MAX_N': 12,
    'BRIDGE_TRIALS': 200,
    'HUB_POSITIVES': 50,
    'STAR_HUB_POSITIVES': 20,
    'SEED': 0,
    'WORKERS': 1,
    'REPORT_PATH': 'verification_report.json',
}


def toolkit_setting(name):
    """Return settings.SPECTRA[name], falling back to the built-in default."""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown toolkit setting: {name}")
    try:
        from django.conf import settings
        configured = getattr(settings, 'SPECTRA', {})
    except ImproperlyConfigured:
        configured = {}
    return configured.get(name, DEFAULTS[name])
