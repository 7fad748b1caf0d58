import warnings

import pytest

from twinlab import config
from twinlab.config import OutputFormat, PipelineConfig, TwinMode
from twinlab.errors import CapExceededError, ConfigurationError


class TestCapOverride(object):

    def test_default(self, no_cap_override):
        assert config.cap_multiplier() == 1
        assert config.max_ball_radius() == config.MAX_BALL_RADIUS
        assert config.twin_length_cap(2) == 4

    def test_raised_caps_warn(self, monkeypatch):
        config._parse_override.cache_clear()
        monkeypatch.setenv(config.CAP_OVERRIDE_ENV, '2')
        with pytest.warns(RuntimeWarning):
            assert config.max_ball_radius() == 2 * config.MAX_BALL_RADIUS

    def test_warns_once(self, monkeypatch):
        config._parse_override.cache_clear()
        monkeypatch.setenv(config.CAP_OVERRIDE_ENV, '3')
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            config.max_ball_radius()
            config.max_ball_size()
            config.max_word_length()
        assert len(caught) == 1
        assert config.max_ball_radius() == 3 * config.MAX_BALL_RADIUS

    @pytest.mark.parametrize('raw', ['x', '0', '-3', '1.5'])
    def test_invalid(self, monkeypatch, raw):
        monkeypatch.setenv(config.CAP_OVERRIDE_ENV, raw)
        with pytest.raises(ConfigurationError):
            config.cap_multiplier()

    def test_blank_is_default(self, monkeypatch):
        monkeypatch.setenv(config.CAP_OVERRIDE_ENV, ' ')
        assert config.cap_multiplier() == 1

    def test_unsupported_field_order(self):
        with pytest.raises(ConfigurationError):
            config.twin_length_cap(7)


def test_check_cap():
    assert config.check_cap('chambers', 10, 10) == 10
    with pytest.raises(CapExceededError) as exc:
        config.check_cap('chambers', 11, 10)
    assert exc.value.limit == 10
    assert exc.value.value == 11
    assert 'chambers = 11 exceeds the cap of 10' in str(exc.value)


class TestPipelineConfig(object):

    def test_defaults(self, no_cap_override):
        c = PipelineConfig('system.json')
        assert c.radius == 6
        assert c.max_len == 8
        assert c.twin_q == (2, 3)
        assert c.twin_cap(3) == 3
        assert c.output_format is OutputFormat.json
        assert c.twin is TwinMode.auto
        assert not c.export_graphs

    def test_enum_values(self):
        c = PipelineConfig('system.json', output_format='markdown',
                           twin=TwinMode.never, twin_q=[3, 2, 3])
        assert c.output_format is OutputFormat.markdown
        assert c.twin is TwinMode.never
        assert c.twin_q == (2, 3)

    @pytest.mark.parametrize('kwargs', [
        {'radius': -1},
        {'radius': True},
        {'radius': 2.0},
        {'radius': 13},
        {'max_len': 17},
        {'action_length': -2},
        {'output_format': 'xml'},
        {'twin': 'sometimes'},
        {'twin_q': (7,)},
        {'twin_caps': {2: 9}},
    ])
    def test_invalid(self, no_cap_override, kwargs):
        with pytest.raises(ConfigurationError):
            PipelineConfig('system.json', **kwargs)

    def test_custom_caps(self):
        c = PipelineConfig('system.json', twin_q=(2,), twin_caps={2: 1})
        assert c.twin_cap(2) == 1
