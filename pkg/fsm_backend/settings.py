"""
Django settings for fsm_backend project.

有限オートマトンの実行と計算グラフ生成を行う ``automata`` アプリ用の設定。
Web 層は持たず、管理コマンド ``fa`` とライブラリ API のみを提供する。

環境依存の値は python-decouple で読み込む（.env / 環境変数）。

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from decouple import Choices, config
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config(
    "SECRET_KEY",
    default="django-insecure-fsm-backend-local-development-key",
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS: list[str] = []


# Application definition

INSTALLED_APPS = [
    'automata',
]

# データベースは使用しない（機械はすべてメモリ上の不変値）
DATABASES: dict[str, dict[str, str]] = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'ja'
TIME_ZONE = 'Asia/Tokyo'
USE_I18N = True
USE_TZ = True


# オートマトン関連の設定

# サマリー出力の ANSI カラー: auto（TTY 判定） / never / always
FA_COLOR = config(
    "FA_COLOR",
    default="auto",
    cast=Choices(["auto", "never", "always"]),
)

# DOT 出力のレイアウト方向（Graphviz の rankdir）
FA_DOT_RANKDIR = config("FA_DOT_RANKDIR", default="LR")

FA_LOG_LEVEL = config("FA_LOG_LEVEL", default="WARNING")


# ログ設定（標準出力はコマンド結果専用なので stderr に出す）
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "%(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "automata": {
            "handlers": ["console"],
            "level": FA_LOG_LEVEL,
            "propagate": False,
        },
    },
}
