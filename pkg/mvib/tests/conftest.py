import pytest

from mvib.data import make_planted_cohort

# small encoder stack for fast toy runs; GIN widths stay at the full
# 128/256/512 (they are cheap at C=8)
TOY_NET = dict(e2e_maps=(4, 8), e2n_maps=8, tensor_dim=16,
               gin_widths=(128, 256, 512), fusion_hidden=(256, 128),
               fused_dim=64)


@pytest.fixture(scope="session")
def cohort(tmp_path_factory):
    work = tmp_path_factory.mktemp("planted")
    return make_planted_cohort(work, n_per_class=24, C=8, T=200, seed=0)
