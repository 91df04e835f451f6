use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

/// Seed of a deterministic sample stream. Identical seed and configuration
/// give bit-identical streams.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeedValue(pub u64);

impl From<u64> for SeedValue {
    fn from(seed: u64) -> Self {
        Self(seed)
    }
}

/// Seed for chunk `index` of a chunked Monte Carlo run: `seed ⊕ index`.
pub fn chunk_seed(seed: SeedValue, index: u64) -> SeedValue {
    SeedValue(seed.0 ^ index)
}

pub fn rng_for(seed: SeedValue) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed.0)
}
