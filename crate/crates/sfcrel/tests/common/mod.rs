//! Shared test support: a deterministic random-scenario generator and the
//! golden values of the published studies.

pub mod golden;

use sfcrel::model::{CommonRoot, Hierarchy, ReliabilityClassSpec, Scenario, ServiceDemand};

/// Small deterministic generator for test inputs.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random valid scenario: up to three classes over a 2-4 level hierarchy,
/// chains of up to three VNF types, random placements, and optionally a
/// nested pair of common roots.
pub fn random_scenario(seed: u64) -> Scenario {
    let mut rng = SplitMix(seed);
    let depth = 2 + rng.below(3) as usize;
    let hierarchy = Hierarchy::new((1..=depth).map(|c| format!("l{c}")).collect());
    let psi = 1 + rng.below(3) as u32;
    let class_count = 1 + rng.below(3) as usize;

    let mut classes: Vec<ReliabilityClassSpec> = (0..class_count)
        .map(|_| {
            let delta = 1 + rng.below(depth as u64) as usize;
            let epsilon: Vec<u64> = (0..depth)
                .map(|_| match rng.below(6) {
                    0 => 2,
                    1 => 3,
                    _ => 1,
                })
                .collect();
            let reliabilities: Vec<f64> = (0..depth)
                .map(|_| match rng.below(8) {
                    0 => 1.0,
                    1 => 0.999,
                    _ => 0.5 + 0.5 * rng.unit(),
                })
                .collect();
            let n_sub = epsilon.iter().product();
            ReliabilityClassSpec { n_sub, epsilon, delta, reliabilities }
        })
        .collect();

    let mut common_roots = Vec::new();
    if class_count >= 2 && rng.below(2) == 0 {
        // Top root at level 1 over a prefix of the classes.
        let joined = 2 + rng.below(class_count as u64 - 1) as usize;
        for class in classes.iter_mut().take(joined) {
            class.epsilon[0] = 1;
            class.delta = class.delta.min(depth - 1);
            class.n_sub = class.epsilon.iter().product();
        }
        let p_root = classes[0].reliabilities[0];
        for class in classes.iter_mut().take(joined) {
            class.reliabilities[0] = p_root;
        }
        common_roots.push(CommonRoot::new(1, (0..joined).collect()));

        // Sometimes a nested rack-level root over a smaller prefix.
        if depth >= 3 && rng.below(2) == 0 {
            let nested = 2 + rng.below(joined as u64 - 1) as usize;
            for class in classes.iter_mut().take(nested) {
                class.epsilon[1] = 1;
                class.delta = class.delta.min(depth - 2);
                class.n_sub = class.epsilon.iter().product();
            }
            let p_root = classes[0].reliabilities[1];
            for class in classes.iter_mut().take(nested) {
                class.reliabilities[1] = p_root;
            }
            common_roots.push(CommonRoot::new(2, (0..nested).collect()));
        }
    }

    let total: u64 = classes.iter().map(|c| c.n_sub).sum();
    let k = 1 + rng.below(total);
    let mut scenario =
        Scenario::new(ServiceDemand::new(k, total - k, psi), hierarchy, classes);
    scenario.common_roots = common_roots;
    scenario
}
