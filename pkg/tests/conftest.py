import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lumamark.pixmap import write_rgb_image, write_watermark
from lumamark.testimages import CORPUS_NAMES, corpus_image, logo_watermark


@pytest.fixture(scope="session")
def corpus():
    """The three deterministic 512x512 test images, keyed by name."""
    return {name: corpus_image(name) for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def logo():
    return logo_watermark()


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory, corpus, logo):
    """Corpus written to disk for CLI runs."""
    root = tmp_path_factory.mktemp("corpus")
    for name, img in corpus.items():
        (root / f"{name}.ppm").write_bytes(write_rgb_image(img))
    (root / "logo.pbm").write_bytes(write_watermark(logo))
    return root
