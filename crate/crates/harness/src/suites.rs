//! The verification suites. Each check is a standalone function returning one
//! or more records; a suite runs its checks in a fixed order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use amalgam::finite::{
    check_intertwiner, deviation_bound_check, deviation_bound_check_exact, diagonal_orbits,
    fixed_point_dimension, fourier, inverse_fourier, projection_en, tail_trace, AtomSpace,
    FiniteFunction, ProductDomain,
};
use amalgam::witness::{
    level_alphabet, orthogonality_inequality_check, xi, xi_identity_overlap_sq, AdjointFixedCheck,
};
use amalgam::{
    conjugate_growth_profile, eq, membership, word_spheres, Error, GroupWord, HnVector,
    LambdaMatrix, PrimeSeq, Subgroup,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde_json::json;

use crate::config::Config;
use crate::report::{CheckBuilder, CheckRecord, Report};
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Icc,
    Orbits,
    Fourier,
    Xi,
    Disjoint,
    Bound,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Icc, Suite::Orbits, Suite::Fourier, Suite::Xi, Suite::Disjoint, Suite::Bound];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Icc => "icc",
            Suite::Orbits => "orbits",
            Suite::Fourier => "fourier",
            Suite::Xi => "xi",
            Suite::Disjoint => "disjoint",
            Suite::Bound => "bound",
        }
    }

    pub fn checks(self, cfg: &Config) -> Vec<CheckRecord> {
        match self {
            Suite::Icc => vec![group_axioms(cfg), amalgam_soundness(cfg), conjugate_growth(cfg)],
            Suite::Orbits => [orbit_classification(cfg), fixed_point_dimensions(cfg)].concat(),
            Suite::Fourier => vec![fourier_intertwining(cfg), fourier_roundtrip(cfg), projection_identities(cfg)],
            Suite::Xi => [vec![xi_overlap(cfg)], xi_invariance(cfg)].concat(),
            Suite::Disjoint => [disjointness(cfg), orthogonality(cfg)].concat(),
            Suite::Bound => vec![tail_trace_products(cfg), extreme_functions(cfg), unit_ball_samples(cfg)],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

pub fn run_suite(suite: Suite, cfg: &Config) -> Report {
    let started = Instant::now();
    let checks = suite.checks(cfg);
    Report::new(suite.name(), cfg.record(), checks, started.elapsed().as_millis() as u64)
}

/// Runs every suite on its own thread; reports come back in suite order.
pub fn run_all(cfg: &Config) -> Vec<Report> {
    std::thread::scope(|s| {
        let handles: Vec<_> = Suite::ALL.map(|suite| s.spawn(move || run_suite(suite, cfg))).into();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    })
}

fn prefix(primes: &PrimeSeq, n: usize) -> usize {
    n.min(primes.len())
}

fn ball_estimate(alphabet: usize, radius: usize) -> u128 {
    (0..=radius as u32).map(|r| (alphabet as u128).saturating_pow(r)).fold(0, u128::saturating_add)
}

fn cube(p: u64) -> BigInt {
    BigInt::from(p).pow(3)
}

// ---- icc ----

pub fn group_axioms(cfg: &Config) -> CheckRecord {
    let samples = cfg.samples_or(10_000);
    let max_level = cfg.level.unwrap_or(3);
    let k_bound = prefix(&cfg.primes, 3);
    let mut c = CheckBuilder::new("group_axioms")
        .param("samples", samples)
        .param("max_word_length", 8)
        .param("max_level", max_level)
        .param("k_indices", k_bound);
    let mut rng = sampling::stream(cfg.seed, 1);
    let e = GroupWord::identity();
    for _ in 0..samples {
        let [a, b, d] = [(); 3].map(|_| sampling::word(&mut rng, &cfg.primes, 8, k_bound, max_level));
        let ai = a.inv();
        let ok = eq(&a.mul(&b).mul(&d), &a.mul(&b.mul(&d)))
            && eq(&a.mul(&ai), &e)
            && eq(&ai.mul(&a), &e)
            && eq(&a.mul(&e), &a)
            && eq(&e.mul(&a), &a);
        c.expect(ok, || format!("a = {a}; b = {b}; c = {d}"));
    }
    c.finish()
}

pub fn amalgam_soundness(cfg: &Config) -> CheckRecord {
    let samples = cfg.samples_or(1_000);
    let levels = match cfg.level {
        Some(l) if l >= 1 => vec![l],
        _ => vec![1, 2, 3],
    };
    let k_bound = prefix(&cfg.primes, 3);
    let mut c = CheckBuilder::new("amalgam_soundness")
        .param("samples", samples)
        .param("levels", &levels);
    let mut rng = sampling::stream(cfg.seed, 2);
    let e = GroupWord::identity();
    let mut by_length = BTreeMap::<usize, usize>::new();
    for _ in 0..samples {
        let level = levels[rng.gen_range(0..levels.len())];
        let (w, r) = sampling::reduced_word(&mut rng, &cfg.primes, level, k_bound);
        *by_length.entry(r).or_default() += 1;
        c.expect(w.stable_count() == r && !eq(&w, &e), || format!("{w} (built with r = {r})"));
    }
    c.detail("words_by_stable_count", by_length);
    c.finish()
}

/// Three elements from each of G_0 ∖ K, K ∖ {e}, G_1 ∖ G_0 and G_2 ∖ G_1.
pub fn growth_test_set(primes: &PrimeSeq) -> Result<Vec<(&'static str, GroupWord)>, Error> {
    let h = |n, c| HnVector::new(primes, n, c).map(GroupWord::from);
    let l = |i, j, s| GroupWord::from(LambdaMatrix::elementary(i, j, s));
    let t = GroupWord::stable;
    Ok(vec![
        ("G0 - K", l(0, 1, 1)),
        ("G0 - K", h(0, [1, 0, 0])?.mul(&l(1, 2, -1))),
        ("G0 - K", l(0, 1, 1).mul(&l(1, 2, 1))),
        ("K - e", h(0, [1, 0, 0])?),
        ("K - e", h(1, [1, 2, 0])?),
        ("K - e", h(0, [1, 1, 1])?.mul(&h(2, [0, 3, 1])?)),
        ("G1 - G0", t(1, 1)?),
        ("G1 - G0", t(1, 1)?.mul(&l(0, 1, 1))),
        ("G1 - G0", h(0, [1, 0, 0])?.mul(&t(1, 2)?)),
        ("G2 - G1", t(2, 1)?),
        ("G2 - G1", t(2, 1)?.mul(&h(0, [1, 1, 1])?)),
        ("G2 - G1", t(2, 1)?.mul(&l(1, 0, -1))),
    ])
}

pub fn conjugate_growth(cfg: &Config) -> CheckRecord {
    let radius = cfg.radius_or(3);
    let c = CheckBuilder::new("conjugate_growth").param("radius", radius).param("threshold", 5);
    // the largest conjugator alphabet is Λ plus one stable letter
    if ball_estimate(14, radius) > cfg.size_guard {
        return c.skip(format!("conjugator ball at radius {radius} exceeds the size guard"));
    }
    let set = match growth_test_set(&cfg.primes) {
        Ok(s) => s,
        Err(e) => return c.skip(format!("test set needs more primes: {e}")),
    };
    let mut c = c;
    let mut profiles = Vec::new();
    for (class, g) in set {
        let profile = conjugate_growth_profile(&g, radius).expect("test set has no identity");
        let monotone = profile[0] == 1 && profile.windows(2).all(|w| w[0] <= w[1]);
        let reaches = radius < 3 || profile[3] >= 5;
        c.expect(monotone && reaches, || format!("{g}: {profile:?}"));
        profiles.push(json!({ "class": class, "element": g.to_string(), "profile": profile }));
    }
    c.detail("profiles", profiles);
    c.finish()
}

// ---- orbits ----

fn orbit_index_sets(primes: &PrimeSeq) -> Vec<Vec<usize>> {
    (1..=prefix(primes, 3)).map(|k| (0..k).collect()).collect()
}

/// Block sizes predicted by the zero-pattern classification: products of
/// 1 or p^3 − 1 over the factors.
fn predicted_sizes(primes: &[u64]) -> Vec<u128> {
    let mut sizes = vec![1u128];
    for &p in primes {
        let nonzero = (p as u128).pow(3) - 1;
        sizes = sizes.iter().flat_map(|&s| [s, s * nonzero]).collect();
    }
    sizes.sort_unstable();
    sizes
}

pub fn orbit_classification(cfg: &Config) -> Vec<CheckRecord> {
    orbit_index_sets(&cfg.primes)
        .into_iter()
        .map(|indices| {
            let ps: Vec<u64> = indices.iter().map(|&i| cfg.primes.as_slice()[i]).collect();
            let mut c = CheckBuilder::new("orbit_classification")
                .param("indices", &indices)
                .param("primes", &ps);
            let part = match diagonal_orbits(&cfg.primes, &indices, cfg.size_guard) {
                Ok(p) => p,
                Err(Error::SizeGuard { points, guard }) => {
                    return c.skip(format!("{points} points exceed the size guard {guard}"))
                }
                Err(e) => return c.skip(e.to_string()),
            };
            let mut sizes: Vec<u128> = part.sizes().into_iter().map(|s| s as u128).collect();
            sizes.sort_unstable();
            let expected = predicted_sizes(&ps);
            c.expect(part.block_count() == 1 << indices.len(), || {
                format!("{} blocks", part.block_count())
            });
            c.expect(sizes == expected, || format!("sizes {sizes:?}, predicted {expected:?}"));
            c.expect(part.matches_zero_pattern_classification(), || "blocks differ from zero patterns".into());
            c.expect(part.blocks_are_closed(), || "a block is not closed under the generators".into());
            c.detail("blocks", part.block_count());
            c.detail("sizes", &sizes);
            c.detail("points", sizes.iter().sum::<u128>());
            c.finish()
        })
        .collect()
}

pub fn fixed_point_dimensions(cfg: &Config) -> Vec<CheckRecord> {
    orbit_index_sets(&cfg.primes)
        .into_iter()
        .map(|indices| {
            let mut c = CheckBuilder::new("fixed_point_dimension").param("indices", &indices);
            match fixed_point_dimension(&cfg.primes, &indices, cfg.size_guard) {
                Ok(dim) => {
                    let expected = 1usize << indices.len();
                    c.expect(dim == expected, || format!("dimension {dim}, expected {expected}"));
                    c.detail("dimension", dim);
                    c.finish()
                }
                Err(Error::SizeGuard { points, guard }) => {
                    c.skip(format!("{points} points exceed the size guard {guard}"))
                }
                Err(e) => c.skip(e.to_string()),
            }
        })
        .collect()
}

// ---- fourier ----

pub fn fourier_intertwining(cfg: &Config) -> CheckRecord {
    let indices: Vec<usize> = (0..prefix(&cfg.primes, 4)).collect();
    let mut c = CheckBuilder::new("fourier_intertwining")
        .param("indices", &indices)
        .param("tolerance", cfg.tolerance);
    let mut worst = 0.0f64;
    for &n in &indices {
        let p = cfg.primes.as_slice()[n];
        for g in LambdaMatrix::generators() {
            let dev = check_intertwiner(&g, n, p);
            worst = worst.max(dev);
            c.expect(dev <= cfg.tolerance, || format!("{g} on H_{n}: deviation {dev:e}"));
        }
    }
    c.detail("max_deviation", format!("{worst:e}"));
    c.finish()
}

/// Inverse transform after forward transform on random complex functions.
pub fn fourier_roundtrip(cfg: &Config) -> CheckRecord {
    let samples = cfg.samples_or(4);
    let indices: Vec<usize> = (0..prefix(&cfg.primes, 4)).collect();
    let mut c = CheckBuilder::new("fourier_roundtrip")
        .param("indices", &indices)
        .param("samples", samples)
        .param("tolerance", cfg.tolerance);
    let mut rng = sampling::stream(cfg.seed, 400);
    let mut worst = 0.0f64;
    for &n in &indices {
        let p = cfg.primes.as_slice()[n];
        let domain = ProductDomain::new(&cfg.primes, &[n]).expect("index is configured");
        for _ in 0..samples {
            let values = (0..p.pow(3)).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let f = FiniteFunction::new(domain.clone(), values.collect()).expect("one value per point");
            let back = fourier(&f).and_then(|a| inverse_fourier(&a, n, p)).expect("single summand");
            let dev = back.max_abs_diff(&f);
            worst = worst.max(dev);
            c.expect(dev <= cfg.tolerance, || format!("H_{n}: deviation {dev:e}"));
        }
    }
    c.detail("max_deviation", format!("{worst:e}"));
    c.finish()
}

pub fn projection_identities(cfg: &Config) -> CheckRecord {
    let indices: Vec<usize> = (0..prefix(&cfg.primes, 4)).collect();
    let mut c = CheckBuilder::new("projection_identities").param("indices", &indices);
    for &n in &indices {
        let p = cfg.primes.as_slice()[n];
        let e = projection_en(&cfg.primes, n).expect("index is configured");
        let weight = BigRational::new(BigInt::one(), cube(p));
        let uniform = e.support_len() as u64 == p.pow(3) && e.terms().all(|(_, w)| *w == weight);
        c.expect(uniform, || format!("e_{n} is not p^-3 on all of H_{n}"));
        c.expect(e.convolve(&e) == e, || format!("e_{n} is not idempotent"));
        c.expect(e.trace() == Some(&weight), || format!("trace of e_{n} is not 1/{}", cube(p)));
    }
    c.finish()
}

// ---- xi ----

fn xi_pairs(cfg: &Config) -> Vec<(usize, usize)> {
    cfg.levels_or(&[0, 1, 2])
        .into_iter()
        .flat_map(|level| [(level, level + 1), (level, level + 2)])
        .collect()
}

pub fn xi_overlap(cfg: &Config) -> CheckRecord {
    let mut ns: Vec<usize> = xi_pairs(cfg).into_iter().map(|(_, n)| n).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.retain(|&n| n < cfg.primes.len());
    let mut c = CheckBuilder::new("xi_identity_overlap").param("indices", &ns);
    for n in ns {
        let p = cfg.primes.as_slice()[n];
        let v = xi(&cfg.primes, n).expect("index is configured");
        let overlap = xi_identity_overlap_sq(&v);
        c.expect(overlap == BigRational::new(BigInt::one(), cube(p)), || {
            format!("<delta_e, xi_{n}>^2 = {overlap}")
        });
        c.expect(v.norm_sq() == BigRational::one(), || format!("xi_{n} is not a unit vector"));
    }
    c.finish()
}

pub fn xi_invariance(cfg: &Config) -> Vec<CheckRecord> {
    let radius = cfg.radius_or(4);
    xi_pairs(cfg)
        .into_iter()
        .map(|(level, n)| {
            let c = CheckBuilder::new("xi_invariance")
                .param("level", level)
                .param("index", n)
                .param("radius", radius);
            if n >= cfg.primes.len() {
                return c.skip(format!("index {n} has no configured prime"));
            }
            let k_indices: Vec<usize> = (0..=level).filter(|&j| j < cfg.primes.len()).collect();
            let alphabet = level_alphabet(&cfg.primes, level, &k_indices).expect("indices are configured");
            if ball_estimate(alphabet.len(), radius) > cfg.size_guard {
                return c.skip(format!("ball of radius {radius} over {} letters exceeds the size guard", alphabet.len()));
            }
            let mut c = c.param("alphabet", alphabet.len());
            let v = xi(&cfg.primes, n).expect("index is configured");
            let fixed = AdjointFixedCheck::new(&v);
            let mut ball = 0usize;
            for g in word_spheres(&alphabet, radius).into_iter().flatten() {
                ball += 1;
                c.expect(g.is_member(Subgroup::Level(level)) && fixed.check(&g), || g.to_string());
            }
            c.detail("ball_size", ball);
            c.finish()
        })
        .collect()
}

// ---- disjoint ----

pub fn disjointness(cfg: &Config) -> Vec<CheckRecord> {
    let samples = cfg.samples_or(1_000);
    let len = cfg.primes.len();
    cfg.levels_or(&[1, 2, 3])
        .into_iter()
        .map(|level| {
            let mut c = CheckBuilder::new("disjointness").param("level", level).param("samples", samples);
            if level == 0 || level > len {
                return c.skip(format!("K minus K_{level} has no configured summand"));
            }
            let t = GroupWord::stable(level + 1, 1).expect("level is positive");
            let mut rng = sampling::stream(cfg.seed, 100 + level as u64);
            let upper = (level + 2).min(len);
            for _ in 0..samples {
                let mut k = sampling::k_vector(&mut rng, &cfg.primes, 0..upper);
                let j = rng.gen_range(0..level);
                if k.component(j).is_none() {
                    k.insert(sampling::nonzero_hn_vector(&mut rng, &cfg.primes, j));
                }
                let k = GroupWord::from(k);
                c.expect(!membership(&k.conj_by(&t), Subgroup::K), || format!("outside K_{level}: {k}"));
            }
            let tail = level..upper;
            for _ in 0..samples {
                let k = GroupWord::from(sampling::k_vector(&mut rng, &cfg.primes, tail.clone()));
                c.expect(membership(&k.conj_by(&t), Subgroup::K), || format!("inside K_{level}: {k}"));
            }
            c.finish()
        })
        .collect()
}

pub fn orthogonality(cfg: &Config) -> Vec<CheckRecord> {
    let samples = cfg.samples_or(500);
    cfg.levels_or(&[1, 2])
        .into_iter()
        .map(|level| {
            let upper = prefix(&cfg.primes, level + 2);
            let mut c = CheckBuilder::new("orthogonality")
                .param("level", level)
                .param("samples", samples)
                .param("k_indices", upper);
            let mut rng = sampling::stream(cfg.seed, 200 + level as u64);
            let mut strict = 0usize;
            for _ in 0..samples {
                let y = sampling::k_supported_vector(&mut rng, &cfg.primes, 0..upper);
                let r = orthogonality_inequality_check(&y, level).expect("support lies in K");
                strict += usize::from(r.lhs_sq > r.rhs_sq);
                c.expect(r.pass && r.disjoint && r.decomposes, || {
                    format!("lhs^2 = {}, rhs^2 = {}, disjoint = {}", r.lhs_sq, r.rhs_sq, r.disjoint)
                });
            }
            c.detail("strict", strict);
            c.finish()
        })
        .collect()
}

// ---- bound ----

pub fn tail_trace_products(cfg: &Config) -> CheckRecord {
    let ps = cfg.primes.as_slice();
    let mut c = CheckBuilder::new("tail_trace").param("primes", ps);
    let mut pairs = 0usize;
    for first in 0..ps.len() {
        for last in first..ps.len() {
            pairs += 1;
            let t = tail_trace(&cfg.primes, first, last).expect("indices are configured");
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for &p in &ps[first..=last] {
                num *= cube(p) - 1;
                den *= cube(p);
            }
            let expected = BigRational::new(num, den);
            c.expect(t.partial == expected, || format!("[{first}, {last}]: {} vs {expected}", t.partial));
            c.expect(t.epsilon() == BigRational::one() - &expected, || format!("[{first}, {last}]: epsilon"));
            c.expect(t.remainder_bound > BigRational::zero(), || format!("[{first}, {last}]: remainder"));
        }
    }
    c.detail("ranges", pairs);
    c.finish()
}

fn atom_space(cfg: &Config) -> Result<AtomSpace, String> {
    let first = cfg.level.unwrap_or(0);
    AtomSpace::new(&cfg.primes, first, first + 2).map_err(|e| format!("three factors from {first}: {e}"))
}

pub fn extreme_functions(cfg: &Config) -> CheckRecord {
    let c = CheckBuilder::new("deviation_bound_extremes").param("first", cfg.level.unwrap_or(0)).param("factors", 3);
    let space = match atom_space(cfg) {
        Ok(s) => s,
        Err(e) => return c.skip(e),
    };
    let mut c = c;
    let atoms = space.atom_count();
    let mut worst = 0.0f64;
    for mask in 0u64..1 << atoms {
        let values: Vec<BigRational> = (0..atoms)
            .map(|j| if mask >> j & 1 == 1 { -BigRational::one() } else { BigRational::one() })
            .collect();
        let r = deviation_bound_check_exact(&space, &values).expect("values match the atoms");
        worst = worst.max(r.lhs);
        c.expect(r.pass, || format!("signs {mask:#b}: lhs {} > bound {}", r.lhs, r.bound));
    }
    c.detail("functions", 1u64 << atoms);
    c.detail("max_lhs", format!("{worst:.12}"));
    c.detail("bound", format!("{:.12}", 4.0 * space.epsilon().to_f64().unwrap_or(f64::NAN).sqrt()));
    c.finish()
}

pub fn unit_ball_samples(cfg: &Config) -> CheckRecord {
    let samples = cfg.samples_or(1_000);
    let c = CheckBuilder::new("deviation_bound_samples")
        .param("first", cfg.level.unwrap_or(0))
        .param("factors", 3)
        .param("samples", samples);
    let space = match atom_space(cfg) {
        Ok(s) => s,
        Err(e) => return c.skip(e),
    };
    let mut c = c;
    let mut rng = sampling::stream(cfg.seed, 300);
    for _ in 0..samples {
        let values: Vec<Complex64> = (0..space.atom_count())
            .map(|_| Complex64::from_polar(rng.gen::<f64>().sqrt(), rng.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        let r = deviation_bound_check(&space, &values).expect("values match the atoms");
        c.expect(r.pass, || format!("{values:?}: lhs {} > bound {}", r.lhs, r.bound));
    }
    c.finish()
}
