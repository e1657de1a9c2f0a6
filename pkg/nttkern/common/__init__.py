__ALL__ = ['config', 'contracts', 'utils']
