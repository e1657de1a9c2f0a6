import logging
import logging.config


class ChattyLoggerFilter(logging.Filter):
    """Drop records from third-party loggers below WARNING."""
    def __init__(self, prefixes=('joblib', 'numexpr')):
        super(ChattyLoggerFilter, self).__init__()
        self.prefixes = prefixes

    def filter(self, record):
        if record.levelno >= logging.WARNING:
            return True
        return not record.name.startswith(self.prefixes)


LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,

    'filters': {
        'chatty': {
            '()': ChattyLoggerFilter,
        }
    },

    'formatters': {
        'standard': {
            'format': '%(asctime)s {%(filename)s:%(name)s} [%(levelname)s] '
                      '%(funcName)s(): %(message)s'
        },
    },
    'handlers': {
        'default': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'standard',
            'filters': ['chatty']
        },
    },
    'loggers': {
        '': {
            'handlers': ['default'],
            'level': 'INFO',
            'propagate': True
        }
    }
}


def init(level='INFO'):
    theconfig = dict(LOGGING_CONFIG)
    theconfig['loggers'] = {'': dict(LOGGING_CONFIG['loggers'][''],
                                     level=level)}
    logging.config.dictConfig(theconfig)
