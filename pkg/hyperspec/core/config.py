from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    APP_NAME: str = "hyperspec"
    LOG_LEVEL: str = "WARNING"

    # Desk-scale guard on m(k-1)+1 for enumeration and sweeps
    HYPERSPEC_GUARD: int = 25

    SOLVER_TOLERANCE: float = 1e-10
    SOLVER_MAX_ITERATIONS: int = 1_000_000
    COMPENSATED_SUM_THRESHOLD: int = 10_000

    MIS_MAX_VERTICES: int = 40
    MATCHING_MAX_EDGES: int = 25

    STRICTNESS_MARGIN: float = 1e-8
    VERIFY_WORKERS: int = 1

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")


settings = Settings()
