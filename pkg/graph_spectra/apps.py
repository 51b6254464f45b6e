from django.apps import AppConfig


class GraphSpectraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'graph_spectra'
    verbose_name = 'Graph spectra toolkit'
