# src/config/settings.py
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class GroebnerSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LDM_GROEBNER_")

    order: str = "degrevlex"
    budget_seconds: float = 900.0
    max_reductions: int = 5_000_000

    @field_validator("order")
    @classmethod
    def validate_order(cls, v: str) -> str:
        if v not in ("lex", "degrevlex"):
            raise ValueError(f"Unsupported monomial order: {v}")
        return v

    @field_validator("budget_seconds")
    @classmethod
    def validate_budget(cls, v: float) -> float:
        if v <= 0:
            raise ValueError("budget_seconds must be positive")
        return v


class ClassificationSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LDM_CLASSIFICATION_")

    jobs: int = Field(default=1, ge=1)


class LoggingSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LDM_LOG_")

    level: str = "INFO"
    format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_nested_delimiter="__",
        env_prefix="LDM_",
        extra="ignore",
    )

    groebner: GroebnerSettings = Field(default_factory=GroebnerSettings)
    classification: ClassificationSettings = Field(
        default_factory=ClassificationSettings
    )
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


settings = Settings()
