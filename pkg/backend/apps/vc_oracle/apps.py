from django.apps import AppConfig


class VcOracleConfig(AppConfig):
    name = 'apps.vc_oracle'
