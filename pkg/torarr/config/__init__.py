from torarr.config.settings import Settings, SettingsLoader, load_settings, get_settings

__all__ = ["Settings", "SettingsLoader", "load_settings", "get_settings"]
