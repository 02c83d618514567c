from django.apps import AppConfig


class ReductionConfig(AppConfig):
    name = 'apps.reduction'
