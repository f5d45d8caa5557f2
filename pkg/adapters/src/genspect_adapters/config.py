from dataclasses import dataclass


@dataclass(frozen=True)
class AdapterConfig:
    lang: str
    aligner_model_id: str = "ibm1"
    tagger_model_id: str = "rules"
    batch_size: int = 32

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
