# conftest.py
from decouple import config
from hypothesis import HealthCheck, settings

# 受け入れ確認は HYPOTHESIS_PROFILE=acceptance で 10,000 件実行する
settings.register_profile(
    "default",
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance",
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(config("HYPOTHESIS_PROFILE", default="default"))
