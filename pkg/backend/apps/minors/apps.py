from django.apps import AppConfig


class MinorsConfig(AppConfig):
    name = 'apps.minors'
