//! Named identity suites over seeded random inputs.
//!
//! Every check compares two independently computed values bit for bit and
//! reports the first monomial where they differ.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{enumerate, monotone_count, nc_partitions, Family};
use crate::convolutions::*;
use crate::cumulants::oracles::*;
use crate::cumulants::*;
use crate::error::{Error, Result};
use crate::independence::*;
use crate::rational::{self, Rational};
use crate::shuffle::random::{random_character, random_general, random_infchar, random_rational, seeded};
use crate::shuffle::*;
use crate::ts_expansion::ts_expansion;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Truncation; `None` uses the suite default.
    pub degree: Option<usize>,
    /// Random cases per check; `None` uses the suite default.
    pub cases: Option<usize>,
    /// Alphabet size; `None` uses the suite default.
    pub letters: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    /// The first counterexample, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub degree: usize,
    pub letters: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "PASS {}/{} ({} cases)", self.suite, c.name, c.cases)?,
                Some(e) => writeln!(f, "FAIL {}/{}: {e}", self.suite, c.name)?,
            }
        }
        Ok(())
    }
}

type CaseResult = std::result::Result<(), String>;

/// Inputs shared by the checks of one suite run.
pub struct Ctx {
    seed: u64,
    cases: usize,
    basis: Arc<Basis>,
    checks: Vec<CheckResult>,
}

impl Ctx {
    fn run(&mut self, name: &str, cases: usize, mut case: impl FnMut(&Arc<Basis>, &mut ChaCha8Rng) -> Result<CaseResult>) {
        let salt = self.checks.len() as u64;
        let mut rng = seeded(self.seed.wrapping_mul(1_000_003).wrapping_add(salt));
        let mut done = 0;
        let mut failure = None;
        for _ in 0..cases {
            done += 1;
            match case(&self.basis, &mut rng) {
                Ok(Ok(())) => {}
                Ok(Err(e)) => {
                    failure = Some(e);
                    break;
                }
                Err(e) => {
                    failure = Some(format!("error: {e}"));
                    break;
                }
            }
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            cases: done,
            failure,
        });
    }

    fn each(&mut self, name: &str, case: impl FnMut(&Arc<Basis>, &mut ChaCha8Rng) -> Result<CaseResult>) {
        let n = self.cases;
        self.run(name, n, case)
    }

    fn once(&mut self, name: &str, case: impl FnMut(&Arc<Basis>, &mut ChaCha8Rng) -> Result<CaseResult>) {
        self.run(name, 1, case)
    }
}

fn same(what: &str, a: &Functional, b: &Functional) -> CaseResult {
    match a.first_difference(b) {
        None => Ok(()),
        Some(d) => Err(format!("{what}: {d}")),
    }
}

fn same_scalar(what: &str, a: &Rational, b: &Rational) -> CaseResult {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: {} != {}", rational::format(a), rational::format(b)))
    }
}

fn all(results: impl IntoIterator<Item = CaseResult>) -> CaseResult {
    results.into_iter().collect()
}

fn pair(b: &Arc<Basis>, rng: &mut ChaCha8Rng) -> PairState {
    PairState::new(random_character(b, rng), random_character(b, rng)).expect("random pair")
}

struct Suite {
    name: &'static str,
    about: &'static str,
    degree: usize,
    cases: usize,
    letters: usize,
    body: fn(&mut Ctx),
}

const SUITES: &[Suite] = &[
    Suite { name: "shuffle-axioms", about: "half-shuffle axioms on random functionals", degree: 5, cases: 100, letters: 1, body: shuffle_axioms },
    Suite { name: "triple", about: "exp*, E≺ and E≻ recover the character from its three logarithms", degree: 6, cases: 50, letters: 1, body: triple },
    Suite { name: "adjoint", about: "free and Boolean logarithms are conjugate", degree: 6, cases: 50, letters: 1, body: adjoint },
    Suite { name: "conjugation-partitions", about: "conjugations as irreducible partition sums", degree: 6, cases: 20, letters: 1, body: conjugation_partitions },
    Suite { name: "iterated-pre-lie", about: "right pre-Lie iterations as monotone partition sums", degree: 7, cases: 10, letters: 1, body: iterated_pre_lie },
    Suite { name: "magnus", about: "pre-Lie Magnus element and W/Ω inversion", degree: 6, cases: 30, letters: 1, body: magnus_suite },
    Suite { name: "bch", about: "product of Boolean exponentials", degree: 6, cases: 30, letters: 1, body: bch },
    Suite { name: "moment-cumulant", about: "free, Boolean and monotone cumulants against partition sums", degree: 6, cases: 30, letters: 1, body: moment_cumulant },
    Suite { name: "omega-transforms", about: "Boolean/free to monotone cumulants through ω coefficients", degree: 7, cases: 10, letters: 1, body: omega_transforms },
    Suite { name: "cfree-def", about: "c-free cumulants against their moment recursion", degree: 6, cases: 50, letters: 1, body: cfree_def },
    Suite { name: "cmonotone-def", about: "c-monotone cumulants: closed form, recursion, monotone sum, inversion", degree: 6, cases: 50, letters: 1, body: cmonotone_def },
    Suite { name: "relation", about: "c-free and c-monotone cumulants from each other", degree: 6, cases: 50, letters: 1, body: relation },
    Suite { name: "cfree-convolution", about: "c-free convolution adds c-free cumulants", degree: 6, cases: 30, letters: 1, body: cfree_convolution },
    Suite { name: "cmonotone-assoc", about: "associativity of the c-monotone pair product", degree: 6, cases: 30, letters: 1, body: cmonotone_assoc },
    Suite { name: "cmonotone-collapses", about: "degenerate pairs reduce to monotone, Boolean and orthogonal products", degree: 6, cases: 30, letters: 1, body: cmonotone_collapses },
    Suite { name: "power-additivity", about: "c-monotone cumulants of p^{*M} equal M times those of p", degree: 6, cases: 10, letters: 1, body: power_additivity },
    Suite { name: "orthogonal-decomposition", about: "monotone product as Boolean product with an orthogonal one", degree: 6, cases: 30, letters: 1, body: orthogonal_decomposition },
    Suite { name: "subordination", about: "free product through subordination", degree: 6, cases: 30, letters: 1, body: subordination_suite },
    Suite { name: "scalar-convolutions", about: "Dirac and Bernoulli spot values", degree: 6, cases: 10, letters: 1, body: scalar_convolutions },
    Suite { name: "t-boolean", about: "t-Boolean endpoints and moment formula", degree: 6, cases: 20, letters: 1, body: t_boolean_suite },
    Suite { name: "ts-boolean-shift", about: "shifting t-Boolean cumulants between parameters", degree: 6, cases: 7, letters: 1, body: ts_boolean_shift },
    Suite { name: "t-monotone", about: "both t-monotone formulas and log* Φ_t = t ρ^(t)", degree: 6, cases: 5, letters: 1, body: t_monotone_suite },
    Suite { name: "belinschi-nica", about: "Belinschi–Nica maps: both forms, Diracs, t-Boolean cumulants, semigroup", degree: 6, cases: 10, letters: 1, body: belinschi_nica_suite },
    Suite { name: "independence", about: "c-monotone and monotone sums from the independence rules", degree: 5, cases: 20, letters: 1, body: independence_suite },
    Suite { name: "multilinearity", about: "cumulants are additive in each letter slot", degree: 4, cases: 5, letters: 2, body: multilinearity },
    Suite { name: "counts", about: "partition counts and monotone labelling counts", degree: 10, cases: 1, letters: 1, body: counts },
    Suite { name: "ts-expansion", about: "(t,s) expansion degenerates at t = s and reproduces t-monotone cumulants", degree: 5, cases: 5, letters: 1, body: ts_expansion_suite },
];

/// `(name, description)` of every suite.
pub fn suites() -> Vec<(&'static str, &'static str)> {
    SUITES.iter().map(|s| (s.name, s.about)).collect()
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteReport> {
    let suite = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let degree = config.degree.unwrap_or(suite.degree);
    let letters = config.letters.unwrap_or(suite.letters);
    // Some suites work with partitions only; they still need a basis.
    let basis_degree = if suite.name == "counts" { 1 } else { degree };
    let basis = Basis::get(&Alphabet::first(letters), basis_degree)?;
    let mut ctx = Ctx {
        seed: config.seed,
        cases: config.cases.unwrap_or(suite.cases),
        basis,
        checks: Vec::new(),
    };
    if suite.name == "counts" {
        counts_up_to(&mut ctx, degree);
    } else {
        (suite.body)(&mut ctx);
    }
    Ok(SuiteReport {
        suite: suite.name.to_string(),
        degree,
        letters,
        checks: ctx.checks,
    })
}

fn shuffle_axioms(ctx: &mut Ctx) {
    use Part::*;
    ctx.each("left-left", |b, rng| {
        let (f, g, h) = (random_general(b, rng), random_general(b, rng), random_general(b, rng));
        let lhs = half_shuffle(&half_shuffle(&f, &g, Left)?, &h, Left)?;
        let rhs = half_shuffle(&f, &convolve(&g, &h)?, Left)?;
        Ok(same("(f≺g)≺h = f≺(g*h)", &lhs, &rhs))
    });
    ctx.each("right-left", |b, rng| {
        let (f, g, h) = (random_general(b, rng), random_general(b, rng), random_general(b, rng));
        let lhs = half_shuffle(&half_shuffle(&f, &g, Right)?, &h, Left)?;
        let rhs = half_shuffle(&f, &half_shuffle(&g, &h, Left)?, Right)?;
        Ok(same("(f≻g)≺h = f≻(g≺h)", &lhs, &rhs))
    });
    ctx.each("right-right", |b, rng| {
        let (f, g, h) = (random_general(b, rng), random_general(b, rng), random_general(b, rng));
        let lhs = half_shuffle(&f, &half_shuffle(&g, &h, Right)?, Right)?;
        let rhs = half_shuffle(&convolve(&f, &g)?, &h, Right)?;
        Ok(same("f≻(g≻h) = (f*g)≻h", &lhs, &rhs))
    });
    ctx.each("split", |b, rng| {
        let (f, g) = (random_general(b, rng), random_general(b, rng));
        let sum = &half_shuffle(&f, &g, Left)? + &half_shuffle(&f, &g, Right)?;
        Ok(same("f≺g + f≻g = f*g", &sum, &convolve(&f, &g)?))
    });
}

fn triple(ctx: &mut Ctx) {
    ctx.each("exp-log", |b, rng| {
        let phi = random_character(b, rng);
        Ok(all([Mode::Star, Mode::Left, Mode::Right].into_iter().map(|m| {
            let back = log_map(m, &phi).and_then(|a| exp_map(m, &a));
            match back {
                Ok(f) => same(&format!("{m:?}"), &f, &phi),
                Err(e) => Err(e.to_string()),
            }
        })))
    });
    ctx.each("log-exp", |b, rng| {
        let alpha = random_infchar(b, rng);
        let mut out = Vec::new();
        for m in [Mode::Star, Mode::Left, Mode::Right] {
            out.push(same(&format!("{m:?}"), &log_map(m, &exp_map(m, &alpha)?)?, &alpha));
        }
        Ok(all(out))
    });
}

fn adjoint(ctx: &mut Ctx) {
    ctx.each("boolean-from-free", |b, rng| {
        let phi = random_character(b, rng);
        let inv = conv_inverse(&phi)?;
        let k = log_map(Mode::Left, &phi)?;
        Ok(same("L≻Φ = Φ⁻¹≻L≺Φ≺Φ", &conjugate(&inv, &k, &phi)?, &log_map(Mode::Right, &phi)?))
    });
    ctx.each("free-from-boolean", |b, rng| {
        let phi = random_character(b, rng);
        let inv = conv_inverse(&phi)?;
        let beta = log_map(Mode::Right, &phi)?;
        Ok(same("L≺Φ = Φ≻L≻Φ≺Φ⁻¹", &conjugate(&phi, &beta, &inv)?, &log_map(Mode::Left, &phi)?))
    });
    ctx.each("inverse", |b, rng| {
        let phi = random_character(b, rng);
        let eps = Functional::counit(b);
        let inv = conv_inverse(&phi)?;
        Ok(all([
            same("Φ*Φ⁻¹", &convolve(&phi, &inv)?, &eps),
            same("Φ⁻¹*Φ", &convolve(&inv, &phi)?, &eps),
            same("Neumann", &conv_inverse_neumann(&phi)?, &inv),
        ]))
    });
}

fn conjugation_partitions(ctx: &mut Ctx) {
    ctx.each("inverse-left", |b, rng| {
        let phi = random_character(b, rng);
        let alpha = random_infchar(b, rng);
        let lhs = conjugate(&conv_inverse(&phi)?, &alpha, &phi)?;
        Ok(same("Φ⁻¹≻α≺Φ", &lhs, &conjugation_by_partitions(&alpha, &phi, true)?))
    });
    ctx.each("inverse-right", |b, rng| {
        let phi = random_character(b, rng);
        let alpha = random_infchar(b, rng);
        let lhs = conjugate(&phi, &alpha, &conv_inverse(&phi)?)?;
        Ok(same("Φ≻α≺Φ⁻¹", &lhs, &conjugation_by_partitions(&alpha, &phi, false)?))
    });
}

fn iterated_pre_lie(ctx: &mut Ctx) {
    ctx.each("distinct-factors", |b, rng| {
        let k = rng.gen_range(1..=4);
        let alphas: Vec<Functional> = (0..k).map(|_| random_infchar(b, rng)).collect();
        let mut lhs = alphas[0].clone();
        for a in &alphas[1..] {
            lhs = pre_lie(&lhs, a)?;
        }
        let refs: Vec<&Functional> = alphas.iter().collect();
        Ok(same(&format!("{k} factors"), &lhs, &r_iter_by_partitions(&refs)?))
    });
    ctx.each("r-iter", |b, rng| {
        let (a, g) = (random_infchar(b, rng), random_infchar(b, rng));
        let mut out = Vec::new();
        for n in 0..b.truncation() {
            let mut refs = vec![&a];
            refs.extend(std::iter::repeat_n(&g, n));
            out.push(same(&format!("n = {n}"), &r_iter(&a, &g, n)?, &r_iter_by_partitions(&refs)?));
        }
        Ok(all(out))
    });
}

fn magnus_suite(ctx: &mut Ctx) {
    ctx.each("w-omega-inverse", |b, rng| {
        let (a, g) = (random_infchar(b, rng), random_infchar(b, rng));
        Ok(all([
            same("Ω_γ W_γ", &omega_operator(&g, &w_operator(&g, &a)?)?, &a),
            same("W_γ Ω_γ", &w_operator(&g, &omega_operator(&g, &a)?)?, &a),
        ]))
    });
    ctx.each("monotone-from-boolean", |b, rng| {
        let phi = random_character(b, rng);
        let beta = log_map(Mode::Right, &phi)?;
        let rho = log_map(Mode::Star, &phi)?;
        Ok(all([
            same("Ω'(β) = ρ", &magnus(&beta)?, &rho),
            same("W(ρ) = β", &magnus_inverse(&rho)?, &beta),
        ]))
    });
}

fn bch(ctx: &mut Ctx) {
    ctx.each("boolean-exponentials", |b, rng| {
        let (b1, b2) = (random_infchar(b, rng), random_infchar(b, rng));
        let psi2 = exp_map(Mode::Right, &b2)?;
        let lhs = convolve(&exp_map(Mode::Right, &b1)?, &psi2)?;
        let inner = &b2 + &conjugate(&conv_inverse(&psi2)?, &b1, &psi2)?;
        Ok(same("E≻β₁ * E≻β₂", &lhs, &exp_map(Mode::Right, &inner)?))
    });
}

const BASIC: [CumulantKind; 3] = [CumulantKind::Free, CumulantKind::Boolean, CumulantKind::Monotone];

fn moment_cumulant(ctx: &mut Ctx) {
    ctx.each("cumulants", |b, rng| {
        let phi = random_character(b, rng);
        let mut out = Vec::new();
        for k in BASIC {
            let a = cumulants_of(&phi, k.clone())?;
            out.push(same(&k.to_string(), a.values(), cumulants_by_partitions(&phi, k.clone())?.values()));
        }
        Ok(all(out))
    });
    ctx.each("moments", |b, rng| {
        let alpha = random_infchar(b, rng);
        let mut out = Vec::new();
        for k in BASIC {
            let c = CumulantFamily::new(k.clone(), alpha.clone())?;
            let mode = match k {
                CumulantKind::Free => Mode::Left,
                CumulantKind::Boolean => Mode::Right,
                _ => Mode::Star,
            };
            out.push(same(&k.to_string(), &moments_via_partitions(&c)?, &exp_map(mode, &alpha)?));
        }
        Ok(all(out))
    });
    ctx.each("cross", |b, rng| {
        let phi = random_character(b, rng);
        let mut out = Vec::new();
        for from in BASIC {
            let src = cumulants_of(&phi, from.clone())?;
            for to in BASIC {
                let via = cumulant_cross(&src, to.clone())?;
                let direct = cumulants_by_partitions(&moments_via_partitions(&src)?, to.clone())?;
                out.push(same(&format!("{from} -> {to}"), via.values(), direct.values()));
            }
        }
        Ok(all(out))
    });
}

fn omega_transforms(ctx: &mut Ctx) {
    ctx.each("omega", |b, rng| {
        let phi = random_character(b, rng);
        let h = cumulants_of(&phi, CumulantKind::Monotone)?;
        let mut out = Vec::new();
        for from in [CumulantKind::Boolean, CumulantKind::Free] {
            let src = cumulants_of(&phi, from.clone())?;
            let via = cumulant_cross(&src, CumulantKind::Monotone)?;
            out.push(same(&format!("{from} -> monotone"), via.values(), h.values()));
        }
        Ok(all(out))
    });
}

fn cfree_def(ctx: &mut Ctx) {
    ctx.each("oracle", |b, rng| {
        let p = pair(b, rng);
        Ok(same("K", cfree_cumulants(&p)?.values(), cfree_oracle(&p)?.values()))
    });
    ctx.each("collapses", |b, rng| {
        let phi = random_character(b, rng);
        let free = cumulants_of(&phi, CumulantKind::Free)?;
        let boolean = cumulants_of(&phi, CumulantKind::Boolean)?;
        Ok(all([
            same("(Φ,Φ)", cfree_cumulants(&PairState::diagonal(phi.clone())?)?.values(), free.values()),
            same("(Φ,ε)", cfree_cumulants(&PairState::with_counit(phi)?)?.values(), boolean.values()),
        ]))
    });
}

fn cmonotone_def(ctx: &mut Ctx) {
    ctx.each("oracles", |b, rng| {
        let p = pair(b, rng);
        let pc = cmonotone_cumulants(&p)?;
        Ok(all([
            same("recursion", pc.values(), cmonotone_oracle(&p)?.values()),
            same("monotone partitions", pc.values(), cmonotone_by_monotone_partitions(&p)?.values()),
            same("W inversion", pc.values(), cmonotone_by_inversion(&p)?.values()),
        ]))
    });
    ctx.each("w-rho", |b, rng| {
        let p = pair(b, rng);
        let pc = cmonotone_cumulants(&p)?;
        let rho = log_map(Mode::Star, &p.psi)?;
        let beta = log_map(Mode::Right, &p.phi)?;
        Ok(all([
            same("W_ρ'(P) = β", &w_operator(&rho, pc.values())?, &beta),
            same("partition form", &w_rho_by_partitions(pc.values(), &rho)?, &beta),
        ]))
    });
    ctx.each("collapses", |b, rng| {
        let phi = random_character(b, rng);
        let mono = cumulants_of(&phi, CumulantKind::Monotone)?;
        let boolean = cumulants_of(&phi, CumulantKind::Boolean)?;
        Ok(all([
            same("(Φ,Φ)", cmonotone_cumulants(&PairState::diagonal(phi.clone())?)?.values(), mono.values()),
            same("(Φ,ε)", cmonotone_cumulants(&PairState::with_counit(phi)?)?.values(), boolean.values()),
        ]))
    });
}

fn relation(ctx: &mut Ctx) {
    ctx.each("cfree-from-cmonotone", |b, rng| {
        let p = pair(b, rng);
        let k = cfree_cumulants(&p)?;
        Ok(all([
            same("K = W_{-ρ'}(P)", cfree_from_cmonotone(&p)?.values(), k.values()),
            same("partition form", cfree_from_cmonotone_partitions(&p)?.values(), k.values()),
        ]))
    });
    ctx.each("cmonotone-from-cfree", |b, rng| {
        let p = pair(b, rng);
        let pc = cmonotone_cumulants(&p)?;
        Ok(all([
            same("P = Ω_{-ρ'}(K)", cmonotone_from_cfree(&p)?.values(), pc.values()),
            same("partition form", cmonotone_from_cfree_partitions(&p)?.values(), pc.values()),
        ]))
    });
}

fn cfree_convolution(ctx: &mut Ctx) {
    ctx.each("additivity", |b, rng| {
        let (p1, p2) = (pair(b, rng), pair(b, rng));
        let out = cfree_convolve(&p1, &p2)?;
        let sum = cfree_cumulants(&p1)?.values() + cfree_cumulants(&p2)?.values();
        let free = additive_convolve(&p1.psi, &p2.psi, Additive::Free)?;
        Ok(all([
            same("K(p₁⊞p₂)", cfree_cumulants(&out)?.values(), &sum),
            same("Ψ = Ψ₁⊞Ψ₂", &out.psi, &free),
        ]))
    });
    ctx.each("collapses", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        let out = cfree_convolve(&PairState::diagonal(phi.clone())?, &PairState::diagonal(psi.clone())?)?;
        let free = additive_convolve(&phi, &psi, Additive::Free)?;
        Ok(all([same("Φ", &out.phi, &free), same("Ψ", &out.psi, &free)]))
    });
}

fn cmonotone_assoc(ctx: &mut Ctx) {
    ctx.each("associativity", |b, rng| {
        let (p1, p2, p3) = (pair(b, rng), pair(b, rng), pair(b, rng));
        let l = cmonotone_convolve(&cmonotone_convolve(&p1, &p2)?, &p3)?;
        let r = cmonotone_convolve(&p1, &cmonotone_convolve(&p2, &p3)?)?;
        Ok(all([same("Φ", &l.phi, &r.phi), same("Ψ", &l.psi, &r.psi)]))
    });
    ctx.each("bch-form", |b, rng| {
        let (p1, p2) = (pair(b, rng), pair(b, rng));
        let out = cmonotone_convolve(&p1, &p2)?;
        // The c-monotone cumulants of both factors transport to the product
        // only in Φ; Ψ is the plain convolution.
        Ok(same("Ψ = Ψ₁*Ψ₂", &out.psi, &convolve(&p1.psi, &p2.psi)?))
    });
}

fn cmonotone_collapses(ctx: &mut Ctx) {
    ctx.each("diagonal", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        let out = cmonotone_convolve(&PairState::diagonal(phi.clone())?, &PairState::diagonal(psi.clone())?)?;
        let m = convolve(&phi, &psi)?;
        Ok(all([same("Φ", &out.phi, &m), same("Ψ", &out.psi, &m)]))
    });
    ctx.each("counit", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        let out = cmonotone_convolve(&PairState::with_counit(phi.clone())?, &PairState::with_counit(psi.clone())?)?;
        Ok(all([
            same("Φ", &out.phi, &additive_convolve(&phi, &psi, Additive::Boolean)?),
            same("Ψ", &out.psi, &Functional::counit(b)),
        ]))
    });
    ctx.each("orthogonal", |b, rng| {
        let (phi, lam, psi) = (random_character(b, rng), random_character(b, rng), random_character(b, rng));
        let eps = Functional::counit(b);
        let out = cmonotone_convolve(&PairState::new(phi.clone(), lam.clone())?, &PairState::new(eps, psi.clone())?)?;
        Ok(all([
            same("Φ", &out.phi, &orthogonal(&phi, &psi)?),
            same("Ψ", &out.psi, &convolve(&lam, &psi)?),
        ]))
    });
}

fn power_additivity(ctx: &mut Ctx) {
    ctx.each("powers", |b, rng| {
        let p = pair(b, rng);
        let base = cmonotone_cumulants(&p)?.into_values();
        let mut out = Vec::new();
        let mut acc = p.clone();
        for m in 1..=5usize {
            if m > 1 {
                acc = cmonotone_convolve(&acc, &p)?;
            }
            let want = base.scale(&rational::int(m as i64));
            out.push(same(&format!("M = {m}"), cmonotone_cumulants(&acc)?.values(), &want));
        }
        out.push(same("power", &cmonotone_power(&p, 5)?.phi, &acc.phi));
        Ok(all(out))
    });
}

fn orthogonal_decomposition(ctx: &mut Ctx) {
    ctx.each("two-forms", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        Ok(same("Ψ⁻¹≻β≺Ψ vs e^{r◁ρ'}β", &orthogonal(&phi, &psi)?, &orthogonal_via_pre_lie(&phi, &psi)?))
    });
    ctx.each("decomposition", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        let lhs = convolve(&phi, &psi)?;
        let rhs = additive_convolve(&orthogonal(&phi, &psi)?, &psi, Additive::Boolean)?;
        Ok(same("Φ*Ψ = (Φ⊢Ψ)⊎Ψ", &lhs, &rhs))
    });
    ctx.each("units", |b, rng| {
        let (phi, psi) = (random_character(b, rng), random_character(b, rng));
        let eps = Functional::counit(b);
        Ok(all([
            same("Φ⊢ε", &orthogonal(&phi, &eps)?, &phi),
            same("ε⊢Ψ", &orthogonal(&eps, &psi)?, &eps),
        ]))
    });
}

fn subordination_suite(ctx: &mut Ctx) {
    ctx.each("free-as-monotone", |b, rng| {
        let (p1, p2) = (random_character(b, rng), random_character(b, rng));
        let lhs = additive_convolve(&p1, &p2, Additive::Free)?;
        Ok(same("Ψ₁⊞Ψ₂ = Ψ₁*(Ψ₂⊳Ψ₁)", &lhs, &convolve(&p1, &subordination(&p2, &p1)?)?))
    });
}

fn dirac(b: &Arc<Basis>, s: &Rational) -> Result<Functional> {
    let mut words = std::collections::BTreeMap::new();
    for &i in b.word_indices() {
        let w = &b.monomial(i as usize).words()[0];
        words.insert(w.clone(), rational::pow(s, w.len()));
    }
    Functional::lift(Kind::Character, &words, b.alphabet(), b.truncation())
}

fn scalar_convolutions(ctx: &mut Ctx) {
    ctx.each("diracs", |b, rng| {
        let (s, t) = (random_rational(rng), random_rational(rng));
        let (ds, dt, sum) = (dirac(b, &s)?, dirac(b, &t)?, dirac(b, &(&s + &t))?);
        let other = random_character(b, rng);
        let mut out = Vec::new();
        for k in [Additive::Free, Additive::Boolean, Additive::Monotone] {
            out.push(same(&format!("{k:?}"), &additive_convolve(&ds, &dt, k)?, &sum));
        }
        let (ps, pt) = (PairState::new(ds.clone(), other.clone())?, PairState::new(dt, other)?);
        out.push(same("c-free", &cfree_convolve(&ps, &pt)?.phi, &sum));
        out.push(same("c-monotone", &cmonotone_convolve(&ps, &pt)?.phi, &sum));
        Ok(all(out))
    });
    if ctx.basis.alphabet().len() == 1 && ctx.basis.truncation() >= 4 {
        ctx.once("bernoulli", |b, _| {
            let mut w = std::collections::BTreeMap::new();
            for n in 1..=b.truncation() {
                w.insert(Word::power(n), rational::int((n % 2 == 0) as i64));
            }
            let ber = Functional::lift(Kind::Character, &w, b.alphabet(), b.truncation())?;
            let m4 = |k| -> Result<Rational> { Ok(additive_convolve(&ber, &ber, k)?.at_power(4)?.clone()) };
            Ok(all([
                same_scalar("free", &m4(Additive::Free)?, &rational::int(6)),
                same_scalar("Boolean", &m4(Additive::Boolean)?, &rational::int(4)),
                same_scalar("monotone", &m4(Additive::Monotone)?, &rational::int(5)),
            ]))
        });
    }
}

fn t_boolean_suite(ctx: &mut Ctx) {
    ctx.each("endpoints", |b, rng| {
        let phi = random_character(b, rng);
        Ok(all([
            same("t = 0", t_boolean(&phi, &rational::zero())?.values(), cumulants_of(&phi, CumulantKind::Boolean)?.values()),
            same("t = 1", t_boolean(&phi, &rational::one())?.values(), cumulants_of(&phi, CumulantKind::Free)?.values()),
        ]))
    });
    ctx.each("formulas", |b, rng| {
        let phi = random_character(b, rng);
        let t = random_rational(rng);
        let bt = t_boolean(&phi, &t)?;
        Ok(all([
            same("oracle", bt.values(), t_boolean_oracle(&phi, &t)?.values()),
            same("moments", &t_boolean_moments(&bt)?, &phi),
        ]))
    });
}

fn ts_boolean_shift(ctx: &mut Ctx) {
    ctx.each("shift", |b, rng| {
        let phi = random_character(b, rng);
        let (s, t) = (random_rational(rng), random_rational(rng));
        let moved = t_boolean_shift(&t_boolean(&phi, &s)?, &s, &t)?;
        Ok(same(
            &format!("s = {}, t = {}", rational::format(&s), rational::format(&t)),
            moved.values(),
            t_boolean(&phi, &t)?.values(),
        ))
    });
}

fn t_monotone_suite(ctx: &mut Ctx) {
    ctx.each("formulas", |b, rng| {
        let phi = random_character(b, rng);
        let t = random_rational(rng);
        let h = t_monotone(&phi, &t)?;
        let rho_t = log_map(Mode::Star, &t_companion(&phi, &t)?)?;
        Ok(all([
            same("Boolean cumulants", &t_monotone_to_boolean(&h)?, &log_map(Mode::Right, &phi)?),
            same("moments", &t_monotone_moments(&h)?, &phi),
            same("log* Φ_t = t ρ^(t)", &rho_t, &h.values().scale(&t)),
        ]))
    });
    ctx.once("endpoints", |b, rng| {
        let phi = random_character(b, rng);
        Ok(all([
            same("t = 0", t_monotone(&phi, &rational::zero())?.values(), cumulants_of(&phi, CumulantKind::Boolean)?.values()),
            same("t = 1", t_monotone(&phi, &rational::one())?.values(), cumulants_of(&phi, CumulantKind::Monotone)?.values()),
        ]))
    });
}

fn nonnegative(rng: &mut ChaCha8Rng) -> Rational {
    let r = random_rational(rng);
    if r < Rational::zero() {
        -r
    } else {
        r
    }
}

fn belinschi_nica_suite(ctx: &mut Ctx) {
    ctx.each("two-forms", |b, rng| {
        let phi = random_character(b, rng);
        let t = nonnegative(rng);
        Ok(same(
            "E≺ form vs E≻ form",
            &belinschi_nica_via(&phi, &t, BnPath::Free)?,
            &belinschi_nica_via(&phi, &t, BnPath::Boolean)?,
        ))
    });
    ctx.each("diracs", |b, rng| {
        let d = dirac(b, &random_rational(rng))?;
        Ok(same("B_t(δ) = δ", &belinschi_nica(&d, &nonnegative(rng))?, &d))
    });
    ctx.each("t-boolean", |b, rng| {
        let phi = random_character(b, rng);
        let t = nonnegative(rng);
        let bt = belinschi_nica(&phi, &t)?;
        Ok(same("β^(t)(B_t Φ) = β", t_boolean(&bt, &t)?.values(), &log_map(Mode::Right, &phi)?))
    });
    ctx.each("semigroup", |b, rng| {
        let phi = random_character(b, rng);
        let (s, t) = (nonnegative(rng), nonnegative(rng));
        let lhs = belinschi_nica(&belinschi_nica(&phi, &t)?, &s)?;
        Ok(same("B_s B_t = B_{s+t}", &lhs, &belinschi_nica(&phi, &(&s + &t))?))
    });
}

fn independence_suite(ctx: &mut Ctx) {
    ctx.each("cmonotone", |b, rng| {
        let (p1, p2) = (pair(b, rng), pair(b, rng));
        let c = Moments::of(&cmonotone_convolve(&p1, &p2)?.phi);
        let (m1, m2) = (PairMoments::of(&p1), PairMoments::of(&p2));
        let mut out = Vec::new();
        for n in 1..=b.truncation() {
            out.push(same_scalar(&format!("n = {n}"), &sum_moments(&m1, &m2, IndependenceMode::CMonotone, n)?, c.get(n)?));
        }
        Ok(all(out))
    });
    ctx.each("monotone", |b, rng| {
        let (p1, p2) = (pair(b, rng), pair(b, rng));
        let c = Moments::of(&convolve(&p1.phi, &p2.phi)?);
        let (m1, m2) = (PairMoments::of(&p1), PairMoments::of(&p2));
        let mut out = Vec::new();
        for n in 1..=b.truncation() {
            out.push(same_scalar(&format!("n = {n}"), &sum_moments(&m1, &m2, IndependenceMode::Monotone, n)?, c.get(n)?));
        }
        Ok(all(out))
    });
    ctx.each("confluence", |b, rng| {
        let (p1, p2) = (PairMoments::of(&pair(b, rng)), PairMoments::of(&pair(b, rng)));
        let n = b.truncation();
        let mut out = Vec::new();
        for mode in [IndependenceMode::Monotone, IndependenceMode::CMonotone] {
            let base = sum_moments(&p1, &p2, mode, n)?;
            let random = sum_moments_with(&p1, &p2, mode, n, &mut PeakOrder::Random(rng))?;
            out.push(same_scalar(&format!("{mode:?}"), &random, &base));
        }
        Ok(all(out))
    });
}

/// Extends a character on letters `a, b` to `a, b, c` with `c = a + b`.
fn with_sum_letter(phi: &Functional) -> Result<Functional> {
    let alphabet = Alphabet::first(3);
    let target = Basis::get(&alphabet, phi.truncation())?;
    let mut words = std::collections::BTreeMap::new();
    for &i in target.word_indices() {
        let w = &target.monomial(i as usize).words()[0];
        let mut expansions: Vec<Vec<u8>> = vec![Vec::new()];
        for &l in w.letters() {
            let choices: &[u8] = if l == 2 { &[0, 1] } else { std::slice::from_ref(&l) };
            expansions = expansions
                .into_iter()
                .flat_map(|e| {
                    choices.iter().map(move |&c| {
                        let mut e = e.clone();
                        e.push(c);
                        e
                    })
                })
                .collect();
        }
        let mut v = Rational::zero();
        for e in expansions {
            v += phi.values()[phi.basis().index_of_letters(&e).expect("inside truncation")].clone();
        }
        words.insert(w.clone(), v);
    }
    Functional::lift(Kind::Character, &words, &alphabet, phi.truncation())
}

fn multilinearity(ctx: &mut Ctx) {
    if ctx.basis.alphabet().len() != 2 {
        ctx.once("alphabet", |b, _| Ok(Err(format!("needs two letters, got {}", b.alphabet().len()))));
        return;
    }
    ctx.each("slots", |b, rng| {
        let p = pair(b, rng);
        let (phi, psi) = (with_sum_letter(&p.phi)?, with_sum_letter(&p.psi)?);
        let wide = PairState::new(phi.clone(), psi)?;
        let families = vec![
            ("free", cumulants_of(&phi, CumulantKind::Free)?.into_values()),
            ("boolean", cumulants_of(&phi, CumulantKind::Boolean)?.into_values()),
            ("monotone", cumulants_of(&phi, CumulantKind::Monotone)?.into_values()),
            ("cfree", cfree_cumulants(&wide)?.into_values()),
            ("cmonotone", cmonotone_cumulants(&wide)?.into_values()),
        ];
        let basis = phi.basis().clone();
        for (name, f) in &families {
            for &i in basis.word_indices() {
                let letters = basis.monomial(i as usize).words()[0].letters().to_vec();
                for (slot, _) in letters.iter().enumerate().filter(|(_, &l)| l == 2) {
                    let mut sum = Rational::zero();
                    for l in [0u8, 1] {
                        let mut w = letters.clone();
                        w[slot] = l;
                        sum += &f.values()[basis.index_of_letters(&w).expect("present")];
                    }
                    if f.values()[i as usize] != sum {
                        return Ok(Err(format!("{name}: slot {} of {}", slot + 1, basis.render(i as usize))));
                    }
                }
            }
        }
        Ok(Ok(()))
    });
}

fn counts(_: &mut Ctx) {}

fn counts_up_to(ctx: &mut Ctx, n_max: usize) {
    ctx.once("catalan", |_, _| {
        let mut c = rational::one();
        for n in 1..=n_max {
            // C_n = C_{n-1} * 2(2n-1)/(n+1)
            c = c * rational::int(2 * (2 * n as i64 - 1)) / rational::int(n as i64 + 1);
            let got = rational::int(enumerate(n, Family::Nc)?.len() as i64);
            if got != c {
                return Ok(Err(format!("|NC({n})| = {got}, expected {c}")));
            }
        }
        Ok(Ok(()))
    });
    ctx.once("monotone-labellings", |_, _| {
        for n in 1..=n_max.min(8) {
            let by_count: u128 = nc_partitions(n).iter().map(monotone_count).sum();
            let direct = enumerate(n, Family::Monotone)?.len() as u128;
            if by_count != direct {
                return Ok(Err(format!("n = {n}: sum m(pi) = {by_count}, enumerated {direct}")));
            }
        }
        Ok(Ok(()))
    });
}

fn ts_expansion_suite(ctx: &mut Ctx) {
    let order = ctx.basis.truncation().saturating_sub(1).clamp(1, 4);
    ctx.once("diagonal", |_, _| {
        let e = ts_expansion(order)?;
        Ok(match e.diagonal_defects().first() {
            None => Ok(()),
            Some((tree, p)) => Err(format!("tree {tree}: t = s leaves {p}")),
        })
    });
    ctx.each("realized", |b, rng| {
        let e = ts_expansion(order)?;
        let phi = random_character(b, rng);
        let (t, s) = (random_rational(rng), random_rational(rng));
        let hs = t_monotone(&phi, &s)?.into_values();
        let ht = t_monotone(&phi, &t)?.into_values();
        Ok(same("ρ^(t) from ρ^(s)", &e.realize(&t, &s, &hs)?, &ht))
    });
}
