//! Statistical certification of planners.
//!
//! [`verify`] draws `sample_count` seeded pairs and checks, for each one,
//! that some rule covers it, that the chosen section starts at `A` and
//! ends at `B`, that sampled path points stay in the space (and keep the
//! two bodies apart on configuration spaces), and that reserved planners
//! return constant paths on the diagonal. A continuity table records the
//! largest step between consecutive samples as the time step is halved.
//! Each sample index gets its own ChaCha stream, so reports are identical
//! for a fixed seed regardless of thread scheduling.

mod sampling;


use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::planner::geom::dist;
use crate::planner::{Planner, ENDPOINT_TOL};

pub use sampling::{adversarial_pairs, perturb, sample_pair, sample_point, HEIGHT_BOX};

#[derive(Debug, Clone, Serialize)]
pub struct VerificationConfig {
    pub sample_count: usize,
    pub seed: u64,
    /// Samples per path; the continuity table refines from here.
    pub time_steps: usize,
    /// Number of step halvings in the continuity table.
    pub refinements: usize,
    /// How many of the sampled pairs feed the continuity table.
    pub continuity_samples: usize,
    /// Input perturbation size for the stability check.
    pub perturbation: f64,
    pub membership_tol: f64,
    pub endpoint_tol: f64,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            sample_count: 10_000,
            seed: 7,
            time_steps: 32,
            refinements: 3,
            continuity_samples: 256,
            perturbation: 1e-7,
            membership_tol: 1e-9,
            endpoint_tol: ENDPOINT_TOL,
        }
    }
}

impl VerificationConfig {
    pub fn new(sample_count: usize, seed: u64) -> Self {
        VerificationConfig {
            sample_count,
            seed,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    /// Sample index, or `adversarial:<k>`.
    pub case: String,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub rule: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContinuityRow {
    pub time_steps: usize,
    pub max_step_displacement: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub planner: String,
    pub space: String,
    pub rule_count: usize,
    pub reserved_claimed: bool,
    pub sample_count: usize,
    pub seed: u64,
    pub height_box: f64,
    pub coverage_fraction: f64,
    pub worst_endpoint_error: f64,
    pub worst_membership_error: f64,
    /// Smallest distance between the two bodies along any sampled path
    /// (configuration spaces only).
    pub min_collision_margin: Option<f64>,
    /// Per rule: `None` if the rule never met a sampled diagonal point,
    /// otherwise whether every such diagonal path was constant.
    pub reserved_ok: Vec<Option<bool>>,
    pub rule_usage: Vec<usize>,
    pub continuity: Vec<ContinuityRow>,
    pub continuity_monotone: bool,
    /// Largest `sup_t |gamma'(t) - gamma(t)| / eps` seen when both inputs
    /// move by about `eps` and the same rule stays selectable.
    pub perturbation_constant: f64,
    pub perturbation_checked: usize,
    pub perturbation_rule_stable: usize,
    pub adversarial_pairs: usize,
    pub adversarial_covered: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

const FAILURES_KEPT: usize = 20;

#[derive(Debug, Clone)]
struct Tally {
    covered: usize,
    endpoint: f64,
    membership: f64,
    collision: f64,
    reserved: Vec<Option<bool>>,
    usage: Vec<usize>,
    continuity: Vec<f64>,
    perturb_k: f64,
    perturb_checked: usize,
    perturb_stable: usize,
    failures: Vec<(usize, Failure)>,
}

impl Tally {
    fn empty(rules: usize, levels: usize) -> Self {
        Tally {
            covered: 0,
            endpoint: 0.0,
            membership: 0.0,
            collision: f64::INFINITY,
            reserved: vec![None; rules],
            usage: vec![0; rules],
            continuity: vec![0.0; levels],
            perturb_k: 0.0,
            perturb_checked: 0,
            perturb_stable: 0,
            failures: Vec::new(),
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.covered += o.covered;
        self.endpoint = self.endpoint.max(o.endpoint);
        self.membership = self.membership.max(o.membership);
        self.collision = self.collision.min(o.collision);
        for (r, x) in self.reserved.iter_mut().zip(o.reserved) {
            *r = match (*r, x) {
                (None, y) => y,
                (y, None) => y,
                (Some(p), Some(q)) => Some(p && q),
            };
        }
        for (u, x) in self.usage.iter_mut().zip(o.usage) {
            *u += x;
        }
        for (c, x) in self.continuity.iter_mut().zip(o.continuity) {
            *c = c.max(x);
        }
        self.perturb_k = self.perturb_k.max(o.perturb_k);
        self.perturb_checked += o.perturb_checked;
        self.perturb_stable += o.perturb_stable;
        self.failures.extend(o.failures);
        self
    }
}

struct Checker<'a> {
    planner: &'a Planner,
    config: &'a VerificationConfig,
    levels: usize,
}

impl Checker<'_> {
    fn fail(
        &self,
        t: &mut Tally,
        order: usize,
        case: String,
        a: &[f64],
        b: &[f64],
        rule: Option<usize>,
        reason: String,
    ) {
        t.failures.push((
            order,
            Failure {
                case,
                a: a.to_vec(),
                b: b.to_vec(),
                rule,
                reason,
            },
        ));
    }

    /// Coverage, endpoints, membership and collision for one pair.
    fn check_pair(
        &self,
        t: &mut Tally,
        order: usize,
        case: String,
        a: &[f64],
        b: &[f64],
    ) -> Option<(usize, crate::planner::PathFn)> {
        let space = &self.planner.space;
        let Some(plan) = self.planner.plan_unchecked(a, b) else {
            self.fail(
                t,
                order,
                case,
                a,
                b,
                None,
                "no rule has positive margin".into(),
            );
            return None;
        };
        t.covered += 1;
        t.usage[plan.rule] += 1;
        let e = dist(&plan.path.eval(0.0), a).max(dist(&plan.path.eval(1.0), b));
        t.endpoint = t.endpoint.max(e);
        if !(e < self.config.endpoint_tol) {
            self.fail(
                t,
                order,
                case.clone(),
                a,
                b,
                Some(plan.rule),
                format!("endpoint error {e:e}"),
            );
        }
        let mut worst_member: f64 = 0.0;
        let mut closest = f64::INFINITY;
        for (_, q) in plan.path.sample(self.config.time_steps) {
            worst_member = worst_member.max(space.membership_error(&q));
            if let Some(c) = space.collision_margin(&q) {
                closest = closest.min(c);
            }
        }
        t.membership = t.membership.max(worst_member);
        t.collision = t.collision.min(closest);
        if !(worst_member < self.config.membership_tol) {
            self.fail(
                t,
                order,
                case.clone(),
                a,
                b,
                Some(plan.rule),
                format!("membership error {worst_member:e}"),
            );
        }
        if !(closest > 0.0) {
            self.fail(
                t,
                order,
                case,
                a,
                b,
                Some(plan.rule),
                "path reaches a collision".into(),
            );
        }
        Some((plan.rule, plan.path))
    }

    /// Every rule whose domain contains `(a, a)` must return the constant path.
    fn check_reserved(&self, t: &mut Tally, order: usize, a: &[f64]) {
        for (k, rule) in self.planner.rules.iter().enumerate() {
            if rule.margin(a, a) <= 0.0 {
                continue;
            }
            let path = rule.section(a, a);
            let dev = path
                .sample(self.config.time_steps)
                .iter()
                .map(|(_, q)| dist(q, a))
                .fold(0.0, f64::max);
            let ok = dev < self.config.endpoint_tol;
            t.reserved[k] = Some(t.reserved[k].unwrap_or(true) && ok);
            if !ok {
                self.fail(
                    t,
                    order,
                    format!("{order}:diagonal"),
                    a,
                    a,
                    Some(k),
                    format!("diagonal path moves by {dev:e}"),
                );
            }
        }
    }

    fn sample(&self, i: usize) -> Tally {
        let mut t = Tally::empty(self.planner.rules.len(), self.levels);
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(i as u64);
        let space = &self.planner.space;
        let (a, b) = sample_pair(space, &mut rng);
        let Some((rule, path)) = self.check_pair(&mut t, i, i.to_string(), &a, &b) else {
            return t;
        };
        if self.planner.reserved {
            self.check_reserved(&mut t, i, &a);
        }
        if i < self.config.continuity_samples {
            for level in 0..self.levels {
                let steps = self.config.time_steps << level;
                let pts = path.sample(steps);
                let step = pts
                    .windows(2)
                    .map(|w| dist(&w[0].1, &w[1].1))
                    .fold(0.0, f64::max);
                t.continuity[level] = step;
            }
        }
        let eps = self.config.perturbation;
        let margin = self.planner.rules[rule].margin(&a, &b);
        if margin > 4.0 * eps {
            if let (Some(a2), Some(b2)) = (
                perturb(space, &a, eps, &mut rng),
                perturb(space, &b, eps, &mut rng),
            ) {
                t.perturb_checked += 1;
                if self.planner.rules[rule].margin(&a2, &b2) > 0.0 {
                    t.perturb_stable += 1;
                    let moved = self.planner.rules[rule].section(&a2, &b2);
                    let shift = (0..=self.config.time_steps)
                        .map(|s| {
                            let tt = s as f64 / self.config.time_steps as f64;
                            dist(&path.eval(tt), &moved.eval(tt))
                        })
                        .fold(0.0, f64::max);
                    let input = dist(&a, &a2).max(dist(&b, &b2)).max(f64::MIN_POSITIVE);
                    t.perturb_k = t.perturb_k.max(shift / input);
                }
            }
        }
        t
    }
}

/// Run the statistical checks. Deterministic for a fixed configuration.
pub fn verify(planner: &Planner, config: &VerificationConfig) -> VerificationReport {
    let levels = config.refinements + 1;
    let checker = Checker {
        planner,
        config,
        levels,
    };
    let rules = planner.rules.len();
    let random = (0..config.sample_count)
        .into_par_iter()
        .map(|i| checker.sample(i))
        .reduce(|| Tally::empty(rules, levels), Tally::merge);

    let adversarial = adversarial_pairs(&planner.space);
    let mut adv = Tally::empty(rules, levels);
    for (k, (a, b)) in adversarial.iter().enumerate() {
        let order = config.sample_count + k;
        checker.check_pair(&mut adv, order, format!("adversarial:{k}"), a, b);
        if planner.reserved && a == b {
            checker.check_reserved(&mut adv, order, a);
        }
    }
    let adversarial_covered = adv.covered;
    let usage = random.usage.clone();
    let covered = random.covered;
    let mut total = random.merge(Tally {
        covered: 0,
        usage: vec![0; rules],
        ..adv
    });
    total.failures.sort_by_key(|(i, _)| *i);
    let failure_count = total.failures.len();

    let continuity: Vec<ContinuityRow> = total
        .continuity
        .iter()
        .enumerate()
        .map(|(l, d)| ContinuityRow {
            time_steps: config.time_steps << l,
            max_step_displacement: *d,
        })
        .collect();
    let continuity_monotone = config.continuity_samples == 0
        || config.sample_count == 0
        || continuity
            .windows(2)
            .all(|w| w[1].max_step_displacement < w[0].max_step_displacement);
    let coverage_fraction = if config.sample_count == 0 {
        1.0
    } else {
        covered as f64 / config.sample_count as f64
    };
    let min_collision_margin = planner
        .space
        .collision_margin(&vec![0.0; planner.space.ambient_dim()])
        .map(|_| total.collision);
    let reserved_ok = total.reserved.clone();
    let passed = failure_count == 0
        && coverage_fraction == 1.0
        && adversarial_covered == adversarial.len()
        && continuity_monotone
        && (!planner.reserved || reserved_ok.iter().all(|r| *r != Some(false)));

    VerificationReport {
        planner: planner.name.clone(),
        space: planner.space.to_string(),
        rule_count: rules,
        reserved_claimed: planner.reserved,
        sample_count: config.sample_count,
        seed: config.seed,
        height_box: HEIGHT_BOX,
        coverage_fraction,
        worst_endpoint_error: total.endpoint,
        worst_membership_error: total.membership,
        min_collision_margin,
        reserved_ok,
        rule_usage: usage,
        continuity,
        continuity_monotone,
        perturbation_constant: total.perturb_k,
        perturbation_checked: total.perturb_checked,
        perturbation_rule_stable: total.perturb_stable,
        adversarial_pairs: adversarial.len(),
        adversarial_covered,
        failure_count,
        failures: total
            .failures
            .into_iter()
            .take(FAILURES_KEPT)
            .map(|(_, f)| f)
            .collect(),
        passed,
    }
}
