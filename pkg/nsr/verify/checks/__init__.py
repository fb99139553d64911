# Importing a module registers its checks
from . import characters, ecs, macdonald, ruijsenaars, theta, toda

__all__ = ["characters", "ecs", "macdonald", "ruijsenaars", "theta", "toda"]
