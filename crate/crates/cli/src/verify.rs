use clap::ValueEnum;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetafam::composites::{functional_equation_pair, special_values};
use zetafam::dirichlet::{closed_form_identity, relation_check, RelationDirection};
use zetafam::{cpt, eval_family, AlphaParam, ComplexPoint, EvalSettings, FamilyId, ZetaError};

use crate::output::VerifyRow;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ClosedForms,
    FunctionalEquations,
    Relations,
    SpecialValues,
    All,
}

const COMPOSED: [FamilyId; 5] = [
    FamilyId::Z,
    FamilyId::P,
    FamilyId::Y,
    FamilyId::O,
    FamilyId::X,
];
const RELATION_FAMILIES: [FamilyId; 4] = [FamilyId::Z, FamilyId::P, FamilyId::Y, FamilyId::O];
const RELATION_MODULI: [u64; 6] = [3, 4, 5, 6, 8, 12];

struct Ctx<'a> {
    args: &'a crate::VerifyArgs,
    cfg: &'a EvalSettings,
    rng: ChaCha8Rng,
    rows: Vec<VerifyRow>,
}

impl Ctx<'_> {
    fn families(&self, allowed: &[FamilyId]) -> Result<Vec<FamilyId>, CliError> {
        match self.args.family {
            Some(f) if allowed.contains(&f) => Ok(vec![f]),
            Some(f) => Err(CliError::usage(format!("{f} is not covered by this suite"))),
            None => Ok(allowed.to_vec()),
        }
    }

    fn point(&mut self, re: std::ops::Range<f64>, im: f64) -> ComplexPoint {
        loop {
            let s = cpt(self.rng.gen_range(re.clone()), self.rng.gen_range(-im..im));
            if s.re.abs() > 0.05 && (s - 1.0).norm() > 0.05 {
                return s;
            }
        }
    }

    fn push(
        &mut self,
        suite: &str,
        check: String,
        fam: FamilyId,
        a: String,
        s: ComplexPoint,
        residual: f64,
    ) {
        self.rows.push(VerifyRow {
            suite: suite.to_string(),
            check,
            family: fam,
            a,
            sigma: s.re,
            t: s.im,
            residual,
            pass: residual < self.args.threshold,
        });
    }

    fn closed_forms(&mut self, strict: bool) -> Result<(), CliError> {
        let alphas = match self.args.a {
            Some(a) if matches!(a.exact(), Some((1, 2 | 3 | 4 | 6))) => vec![a],
            Some(a) if strict => {
                return Err(CliError::usage(format!(
                    "no closed forms at a = {a}; use 1/2, 1/3, 1/4 or 1/6"
                )))
            }
            Some(_) => return Ok(()),
            None => [2, 3, 4, 6]
                .map(|q| AlphaParam::rational(1, q).unwrap())
                .to_vec(),
        };
        for fam in self.families(&COMPOSED)? {
            for a in &alphas {
                for _ in 0..self.args.samples {
                    let s = self.point(-3.0..4.0, 20.0);
                    let (direct, closed) = closed_form_identity(fam, a, s, self.cfg)?;
                    let res = (direct - closed).norm() / direct.norm().max(1.0);
                    self.push(
                        "closed-forms",
                        "closed form".into(),
                        fam,
                        a.to_string(),
                        s,
                        res,
                    );
                }
            }
        }
        Ok(())
    }

    fn functional_equations(&mut self) -> Result<(), CliError> {
        let alphas = match self.args.a {
            Some(a) => vec![a],
            None => vec![
                AlphaParam::new(0.1)?,
                AlphaParam::new(0.3)?,
                AlphaParam::rational(1, 3)?,
                AlphaParam::new(0.49)?,
            ],
        };
        for fam in self.families(&COMPOSED)? {
            for a in &alphas {
                for _ in 0..self.args.samples {
                    let s = self.point(0.05..10.0, 30.0);
                    let (lhs, rhs) = functional_equation_pair(fam, s, a, self.cfg)?;
                    let scale = lhs.norm().max(rhs.norm());
                    let res = if scale == 0.0 {
                        0.0
                    } else {
                        (lhs - rhs).norm() / scale
                    };
                    self.push(
                        "functional-equations",
                        "s <-> 1-s".into(),
                        fam,
                        a.to_string(),
                        s,
                        res,
                    );
                }
            }
        }
        Ok(())
    }

    fn relations(&mut self) -> Result<(), CliError> {
        let pairs: Vec<(u64, u64)> = match (self.args.a, self.args.q) {
            (Some(a), _) => {
                let (r, q) = a
                    .exact()
                    .ok_or_else(|| CliError::usage("relations need an exact a = r/q"))?;
                vec![(r, q)]
            }
            (None, Some(q)) => (1..q).map(|r| (r, q)).collect(),
            (None, None) => RELATION_MODULI
                .iter()
                .flat_map(|&q| (1..q).map(move |r| (r, q)))
                .collect(),
        };
        for fam in self.families(&RELATION_FAMILIES)? {
            for &(r, q) in &pairs {
                if r.gcd(&q) != 1 || (fam.is_odd() && 2 * r >= q) {
                    continue;
                }
                for _ in 0..self.args.samples {
                    let s = self.point(-3.0..4.0, 20.0);
                    for (dir, name) in [
                        (RelationDirection::FamilyToL, "family to L"),
                        (RelationDirection::LToFamily, "L to family"),
                    ] {
                        let (res, n) = relation_check(fam, r, q, s, dir, self.cfg)?;
                        if n > 0 {
                            self.push("relations", name.into(), fam, format!("{r}/{q}"), s, res);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn special_values(&mut self) -> Result<(), CliError> {
        let alphas = match self.args.a {
            Some(a) => vec![a],
            None => (1..=10)
                .map(|k| AlphaParam::rational(k, 20).unwrap())
                .collect(),
        };
        let fams = self.families(&[FamilyId::Z, FamilyId::P])?;
        for a in &alphas {
            let sv = special_values(a)?;
            let checks = [
                (FamilyId::Z, "Z(0,a) = 0", 0.0, sv.z_at_0),
                (FamilyId::P, "P(0,a) = -1", 0.0, sv.p_at_0),
                (FamilyId::P, "P(1,a) = -2 log(2 sin pi a)", 1.0, sv.p_at_1),
            ];
            for (fam, name, sigma, want) in checks {
                if !fams.contains(&fam) {
                    continue;
                }
                let s = cpt(sigma, 0.0);
                let got = eval_family(fam, s, a, self.cfg)?;
                self.push(
                    "special-values",
                    name.into(),
                    fam,
                    a.to_string(),
                    s,
                    (got - want).norm(),
                );
            }
        }
        Ok(())
    }
}

pub(crate) fn run_suites(
    args: &crate::VerifyArgs,
    cfg: &EvalSettings,
) -> Result<Vec<VerifyRow>, CliError> {
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be positive"));
    }
    let mut ctx = Ctx {
        args,
        cfg,
        rng: ChaCha8Rng::seed_from_u64(args.seed),
        rows: Vec::new(),
    };
    match args.suite {
        Suite::ClosedForms => ctx.closed_forms(true)?,
        Suite::FunctionalEquations => ctx.functional_equations()?,
        Suite::Relations => ctx.relations()?,
        Suite::SpecialValues => ctx.special_values()?,
        Suite::All => {
            // each suite only for the families and a it covers
            let fam = args.family;
            let covers = |list: &[FamilyId]| fam.is_none_or(|f| list.contains(&f));
            if covers(&COMPOSED) {
                ctx.closed_forms(false)?;
                ctx.functional_equations()?;
            }
            if covers(&RELATION_FAMILIES) && args.a.is_none_or(|a| a.exact().is_some()) {
                ctx.relations()?;
            }
            if covers(&[FamilyId::Z, FamilyId::P]) && args.a.is_none_or(|a| a.value() < 1.0) {
                ctx.special_values()?;
            }
        }
    }
    if ctx.rows.is_empty() {
        return Err(
            ZetaError::InvalidArgument("no checks apply to the given family and a".into()).into(),
        );
    }
    Ok(ctx.rows)
}
