import copy

from ..presets import default


class RunConfig(dict):
    """
    {
        degree: "truncation degree N of every generated series",
        samples: "circle samples m for certified sup norms",
        tol: "verdict tolerance",
        seed: "root seed; all randomness flows from it",
        radii: "r-grid override (list of radii), or null for the per-theorem presets",
        r_extra: "radii appended to every theorem's grid",
        cases: "case-count override, or null for the per-theorem presets",
        format: "json | csv",
        output: "output path, or null for stdout",
        threads: "worker threads for the suite"
    }
    """
    POSITIVE = ('degree', 'samples', 'threads')
    NON_NEGATIVE = ('tol', 'seed')

    def __init__(self, **kwargs):
        d = dict(
            degree=default['series']['degree'],
            samples=default['bohr']['samples'],
            tol=default['theorems']['tol'],
            seed=default['suite']['seed'],
            radii=None,
            r_extra=[],
            cases=None,
            format=default['output']['format'],
            output=None,
            threads=1
        )
        d.update({k: v for k, v in kwargs.items() if v is not None})

        for key in self.POSITIVE:
            if not d[key] > 0:
                raise ValueError('{} must be positive, got {}'.format(key, d[key]))
        for key in self.NON_NEGATIVE:
            if d[key] < 0:
                raise ValueError('{} cannot be negative, got {}'.format(key, d[key]))
        if d['cases'] is not None and not d['cases'] > 0:
            raise ValueError('cases must be positive, got {}'.format(d['cases']))
        if d['format'] not in ('json', 'csv'):
            raise ValueError('format must be json or csv, got {}'.format(d['format']))
        for r in list(d['radii'] or []) + list(d['r_extra']):
            if not 0 <= r < 1:
                raise ValueError('radius must satisfy 0 <= r < 1, got {}'.format(r))

        super(RunConfig, self).__init__(d)

    def __getattr__(self, item):
        try:
            return self[item]
        except KeyError:
            raise AttributeError(item)

    def cases_for(self, theorem):
        if self['cases'] is not None:
            return self['cases']
        return default['suite']['cases'][theorem]

    def radii_for(self, theorem):
        radii = self['radii']
        if radii is None:
            radii = default['suite']['radii'][theorem]
        return sorted(set(list(radii) + list(self['r_extra'])))

    def reproducibility(self):
        """The part of the config embedded in every report."""
        return copy.deepcopy({k: self[k] for k in ('degree', 'samples', 'tol', 'seed')})
