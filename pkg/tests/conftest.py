import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ncg",
    deadline=None,
    max_examples=int(os.environ.get("NCG_HYPOTHESIS_EXAMPLES", "60")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ncg")
