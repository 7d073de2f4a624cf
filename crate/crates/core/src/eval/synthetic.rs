//! Bug reports with a planted keyword signal, for checking that the whole
//! text-to-label path can learn.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::labeler::LabeledSample;

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub documents: usize,
    pub vocabulary: usize,
    pub keywords: usize,
    /// Chance that a report contains at least one keyword.
    pub keyword_rate: f64,
    pub label_noise: f64,
    pub min_words: usize,
    pub max_words: usize,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            documents: 2000,
            vocabulary: 500,
            keywords: 10,
            keyword_rate: 0.45,
            label_noise: 0.1,
            min_words: 12,
            max_words: 30,
        }
    }
}

impl SyntheticSpec {
    /// Words are `w000`, `w001`, ...; the last `keywords` of them are the
    /// designated design keywords.
    pub fn word(&self, i: usize) -> String {
        format!("w{i:03}")
    }

    pub fn keyword_list(&self) -> Vec<String> {
        (self.vocabulary - self.keywords..self.vocabulary)
            .map(|i| self.word(i))
            .collect()
    }
}

/// Generate reports whose clean label is "contains a keyword", then flip
/// each label with probability `label_noise`.
pub fn generate(spec: &SyntheticSpec, seed: u64) -> Vec<LabeledSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let plain = spec.vocabulary - spec.keywords;
    (0..spec.documents)
        .map(|d| {
            let len = rng.random_range(spec.min_words..=spec.max_words);
            let mut words: Vec<usize> = (0..len).map(|_| rng.random_range(0..plain)).collect();
            let has_keyword = rng.random::<f64>() < spec.keyword_rate;
            if has_keyword {
                for _ in 0..rng.random_range(1..=2) {
                    let kw = plain + rng.random_range(0..spec.keywords);
                    let at = rng.random_range(0..=words.len());
                    words.insert(at, kw);
                }
            }
            words.shuffle(&mut rng);
            let noisy = rng.random::<f64>() < spec.label_noise;
            let label = u8::from(has_keyword != noisy);
            let text: Vec<String> = words.iter().map(|&w| spec.word(w)).collect();
            LabeledSample {
                issue_id: format!("SYN-{d:04}"),
                commit_hash: String::new(),
                text: text.join(" "),
                label,
                total_added_smells: u32::from(label),
                raw_signed_sum: i32::from(label),
            }
        })
        .collect()
}
