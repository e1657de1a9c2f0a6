import anyconfig
import copy
import logging
import os

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(
    os.path.dirname(__file__), os.pardir, os.pardir, "data")
MASTER_CONFIG = os.path.join(DATA_DIR, "master_config.yaml")
INTEGRATION_CONFIG = os.path.join(DATA_DIR, "integration_config.yaml")

SEED_ENV_VAR = "NTT_KERNEL_SEED"


class Config(object):
    """Simple class for loading config files, with
    hierarchical indexing.

    config = {
        "bench": {
            "iterations": 100000
        }
    }
    config["bench/iterations"] will get you the value 100000.
    """
    def __init__(self, data):
        self.data = data

    @classmethod
    def load(cls, path=MASTER_CONFIG):
        return cls(anyconfig.load(path))

    def get(self, key, default=None):
        return self._recursive_get(self.data, key, default)

    def _recursive_get(self, search_dict, key, default=None):
        key_segments = key.split('/')
        if len(key_segments) == 1:
            return search_dict.get(key_segments[0], default)

        new_dict = search_dict.get(key_segments[0])
        new_key = "/".join(key_segments[1:])
        if isinstance(new_dict, dict):
            return self._recursive_get(new_dict, new_key, default)
        elif new_dict is None:
            return default
        else:
            logger.error("Intermediate key '{}' is not referring to "
                         "a dict; returning the value as-is."
                         .format(key_segments[0]))
            return new_dict

    def __getitem__(self, key):
        return self.get(key)

    def __contains__(self, key):
        sentinel = object()
        return self.get(key, sentinel) is not sentinel

    def __bool__(self):
        return bool(self.data)

    def with_overrides(self, overrides):
        """Return a copy of this config with some keys replaced.

        Parameters
        ----------
        overrides : dict
            Map of slash-separated keys to values. Keys whose value is
            None are left untouched, so docopt arguments can be passed
            straight through.

        Returns
        -------
        config : Config
        """
        data = copy.deepcopy(self.data)
        for key, value in overrides.items():
            if value is None:
                continue
            node = data
            segments = key.split('/')
            for segment in segments[:-1]:
                node = node.setdefault(segment, {})
            node[segments[-1]] = value
        return Config(data)

    def resolve_seed(self, seed=None):
        """The seed to use for a run.

        NTT_KERNEL_SEED wins over an explicit seed, which wins over
        the configured default.
        """
        env_seed = os.environ.get(SEED_ENV_VAR)
        if env_seed:
            logger.debug("Using seed {} from {}".format(env_seed,
                                                       SEED_ENV_VAR))
            return int(env_seed)
        if seed is not None:
            return int(seed)
        return int(self.get("run/seed", 0))
