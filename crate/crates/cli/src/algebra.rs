//! Algebra and basis selection for the element commands.

use crate::{Half, Part};
use clap::ValueEnum;
use hopfcomb::combinat::{PackedWord, SegmentedComposition};
use hopfcomb::freemod::{parse_element, GradedBialgebra, Tridendriform};
use hopfcomb::subalg::{
    collect, expand as expand_classes, ew_to_sums, sums_to_ew, sums_to_sw, sw_to_sums, WordClasses,
};
use hopfcomb::tc::{self, SignClasses, Tc, TcEw, TcSw};
use hopfcomb::td::{self, TdEw, TdSw, TreeKey, Trees, TD};
use hopfcomb::wqsym::{
    ew_to_m, f_to_r, iprod_dual, m_to_ew, m_to_phi, m_to_sw, phi_to_m, r_to_f, realize, sw_to_m,
    DualF, EwBasis, PhiBasis, Ribbon, SwBasis, Wqsym,
};
use hopfcomb::{Basis, BasisKey, Element, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Wqsym,
    WqsymDual,
    Td,
    Tc,
}

impl Algebra {
    fn bases(self) -> &'static [Basis] {
        match self {
            Algebra::Wqsym => &[Basis::M, Basis::SW, Basis::EW, Basis::Phi],
            Algebra::WqsymDual => &[Basis::F, Basis::R],
            Algebra::Td => &[Basis::MM, Basis::SW, Basis::EW],
            Algebra::Tc => &[Basis::MC, Basis::SW, Basis::EW],
        }
    }

    fn name(self) -> String {
        self.to_possible_value().expect("named").get_name().to_string()
    }
}

/// A result in text and JSON form.
pub struct Output {
    pub text: String,
    pub json: String,
}

impl<K: BasisKey> From<&Element<K>> for Output {
    fn from(x: &Element<K>) -> Self {
        Output {
            text: x.to_string(),
            json: serde_json::to_string(&x.to_json_terms()).expect("serializable"),
        }
    }
}

fn parse<K: BasisKey>(s: &str, allowed: &[Basis]) -> Result<Element<K>> {
    parse_element(s, allowed, allowed[0])
}

fn degree<K: BasisKey>(x: &Element<K>) -> usize {
    x.max_degree().unwrap_or(0)
}

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge {
            what: "degree",
            requested: n,
            limit,
        });
    }
    Ok(())
}

/// Work to run against whichever structure implements the chosen basis.
trait Job {
    fn run<A: GradedBialgebra>(self, alg: &A) -> Result<Output>;
}

fn dispatch(algebra: Algebra, basis: Basis, job: impl Job) -> Result<Output> {
    match (algebra, basis) {
        (Algebra::Wqsym, Basis::M) => job.run(&Wqsym),
        (Algebra::Wqsym, Basis::SW) => job.run(&SwBasis),
        (Algebra::Wqsym, Basis::EW) => job.run(&EwBasis),
        (Algebra::Wqsym, Basis::Phi) => job.run(&PhiBasis),
        (Algebra::WqsymDual, Basis::F) => job.run(&DualF),
        (Algebra::WqsymDual, Basis::R) => job.run(&Ribbon),
        (Algebra::Td, Basis::MM) => job.run(&TD),
        (Algebra::Td, Basis::SW) => job.run(&TdSw::default()),
        (Algebra::Td, Basis::EW) => job.run(&TdEw::default()),
        (Algebra::Tc, Basis::MC) => job.run(&Tc),
        (Algebra::Tc, Basis::SW) => job.run(&TcSw::default()),
        (Algebra::Tc, Basis::EW) => job.run(&TcEw::default()),
        (a, b) => Err(Error::Unsupported(format!("basis {b} of {}", a.name()))),
    }
}

struct Mul<'a> {
    x: &'a str,
    y: &'a str,
    limit: usize,
}

impl Job for Mul<'_> {
    fn run<A: GradedBialgebra>(self, alg: &A) -> Result<Output> {
        let x = parse(self.x, &[alg.basis()])?;
        let y = parse(self.y, &[alg.basis()])?;
        guard(degree(&x) + degree(&y), self.limit)?;
        Ok((&alg.mul(&x, &y)?).into())
    }
}

fn partial<A: Tridendriform>(alg: &A, x: &str, y: &str, part: Part, limit: usize) -> Result<Output> {
    let x = parse(x, &[alg.basis()])?;
    let y = parse(y, &[alg.basis()])?;
    guard(degree(&x) + degree(&y), limit)?;
    let z = match part {
        Part::Left => alg.tri_left(&x, &y)?,
        Part::Mid => alg.tri_mid(&x, &y)?,
        Part::Right => alg.tri_right(&x, &y)?,
        Part::DendLeft => alg.dend_left(&x, &y)?,
        Part::DendRight => alg.dend_right(&x, &y)?,
    };
    Ok((&z).into())
}

fn half<A: Tridendriform>(alg: &A, x: &str, side: Half, limit: usize) -> Result<Output> {
    let x = parse(x, &[alg.basis()])?;
    guard(degree(&x), limit)?;
    let t = match side {
        Half::Left => alg.codend_left(&x)?,
        Half::Right => alg.codend_right(&x)?,
    };
    Ok((&t).into())
}

fn splittings_unsupported(algebra: Algebra, basis: Basis) -> Error {
    Error::Unsupported(format!(
        "partial operations on basis {basis} of {}; use wqsym M or td MM",
        algebra.name()
    ))
}

pub fn mul(
    algebra: Algebra,
    basis: Basis,
    x: &str,
    y: &str,
    part: Option<Part>,
    limit: usize,
) -> Result<Output> {
    match (part, algebra, basis) {
        (None, ..) => dispatch(algebra, basis, Mul { x, y, limit }),
        (Some(p), Algebra::Wqsym, Basis::M) => partial(&Wqsym, x, y, p, limit),
        (Some(p), Algebra::Td, Basis::MM) => partial(&TD, x, y, p, limit),
        _ => Err(splittings_unsupported(algebra, basis)),
    }
}

struct Comul<'a> {
    x: &'a str,
    limit: usize,
}

impl Job for Comul<'_> {
    fn run<A: GradedBialgebra>(self, alg: &A) -> Result<Output> {
        let x = parse(self.x, &[alg.basis()])?;
        guard(degree(&x), self.limit)?;
        Ok((&alg.comul(&x)?).into())
    }
}

pub fn comul(
    algebra: Algebra,
    basis: Basis,
    x: &str,
    side: Option<Half>,
    limit: usize,
) -> Result<Output> {
    match (side, algebra, basis) {
        (None, ..) => dispatch(algebra, basis, Comul { x, limit }),
        (Some(s), Algebra::Wqsym, Basis::M) => half(&Wqsym, x, s, limit),
        (Some(s), Algebra::Td, Basis::MM) => half(&TD, x, s, limit),
        _ => Err(splittings_unsupported(algebra, basis)),
    }
}

struct Antipode<'a> {
    x: &'a str,
    limit: usize,
}

impl Job for Antipode<'_> {
    fn run<A: GradedBialgebra>(self, alg: &A) -> Result<Output> {
        let x = parse(self.x, &[alg.basis()])?;
        guard(degree(&x), self.limit)?;
        Ok((&alg.antipode(&x)?).into())
    }
}

pub fn antipode(algebra: Algebra, basis: Basis, x: &str, limit: usize) -> Result<Output> {
    dispatch(algebra, basis, Antipode { x, limit })
}

pub fn iprod(algebra: Algebra, x: &str, y: &str, limit: usize) -> Result<Output> {
    match algebra {
        Algebra::WqsymDual => {
            let (x, y) = (parse::<PackedWord>(x, &[Basis::F])?, parse(y, &[Basis::F])?);
            guard(degree(&x).max(degree(&y)), limit)?;
            Ok((&iprod_dual(&x, &y)).into())
        }
        Algebra::Td => {
            let (x, y) = (parse::<TreeKey>(x, &[Basis::S])?, parse(y, &[Basis::S])?);
            guard(degree(&x).max(degree(&y)), limit)?;
            Ok((&td::iprod_s(&x, &y)).into())
        }
        Algebra::Tc => {
            let (x, y) = (parse::<SegmentedComposition>(x, &[Basis::S])?, parse(y, &[Basis::S])?);
            guard(degree(&x).max(degree(&y)), limit)?;
            Ok((&tc::iprod_s(&x, &y)).into())
        }
        Algebra::Wqsym => Err(Error::Unsupported(
            "the internal product lives on the duals: wqsym-dual, td or tc".into(),
        )),
    }
}

fn wqsym_to_m(x: &Element<PackedWord>) -> Element<PackedWord> {
    match x.basis() {
        Basis::SW => sw_to_m(x),
        Basis::EW => ew_to_m(x),
        Basis::Phi => phi_to_m(x),
        _ => x.clone().with_basis(Basis::M),
    }
}

fn wqsym_from_m(x: &Element<PackedWord>, to: Basis) -> Result<Element<PackedWord>> {
    match to {
        Basis::M => Ok(x.clone()),
        Basis::SW => m_to_sw(x),
        Basis::EW => m_to_ew(x),
        Basis::Phi => m_to_phi(x),
        other => Err(Error::Unsupported(format!("basis {other} of wqsym"))),
    }
}

/// A class-sum element (`MM` or `MC`) read from any of its bases.
fn to_sums<C: WordClasses>(c: C, x: &Element<C::Key>, sums: Basis) -> Result<Element<C::Key>> {
    match x.basis() {
        Basis::SW => sw_to_sums(c, x),
        Basis::EW => ew_to_sums(c, x),
        _ => Ok(x.clone().with_basis(sums)),
    }
}

fn from_sums<C: WordClasses>(c: C, x: &Element<C::Key>, to: Basis) -> Result<Output> {
    match to {
        Basis::SW => Ok((&sums_to_sw(c, x)?).into()),
        Basis::EW => Ok((&sums_to_ew(c, x)?).into()),
        Basis::M => Ok((&expand_classes(c, x)).into()),
        _ => Ok(x.into()),
    }
}

pub fn convert(algebra: Algebra, x: &str, to: Basis, limit: usize) -> Result<Output> {
    let allowed = |extra: &[Basis]| -> Result<()> {
        if algebra.bases().contains(&to) || extra.contains(&to) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("basis {to} of {}", algebra.name())))
        }
    };
    match algebra {
        Algebra::Wqsym => {
            allowed(&[])?;
            let x = parse(x, algebra.bases())?;
            guard(degree(&x), limit)?;
            Ok((&wqsym_from_m(&wqsym_to_m(&x), to)?).into())
        }
        Algebra::WqsymDual => {
            allowed(&[])?;
            let x: Element<PackedWord> = parse(x, algebra.bases())?;
            guard(degree(&x), limit)?;
            let y = match (x.basis(), to) {
                (Basis::F, Basis::R) => f_to_r(&x),
                (Basis::R, Basis::F) => r_to_f(&x),
                _ => x,
            };
            Ok((&y).into())
        }
        Algebra::Td => {
            allowed(&[Basis::M])?;
            let x = parse(x, algebra.bases())?;
            guard(degree(&x), limit)?;
            from_sums(Trees, &to_sums(Trees, &x, Basis::MM)?, to)
        }
        Algebra::Tc => {
            allowed(&[Basis::M, Basis::MM])?;
            let x = parse(x, algebra.bases())?;
            guard(degree(&x), limit)?;
            let sums = to_sums(SignClasses, &x, Basis::MC)?;
            if to == Basis::MM {
                return Ok((&collect(Trees, &expand_classes(SignClasses, &sums))?).into());
            }
            from_sums(SignClasses, &sums, to)
        }
    }
}

/// The `M` expansion of an element of any of the primal algebras.
fn in_m(algebra: Algebra, x: &str, limit: usize) -> Result<Element<PackedWord>> {
    let m = match algebra {
        Algebra::Wqsym => wqsym_to_m(&parse(x, algebra.bases())?),
        Algebra::Td => expand_classes(Trees, &to_sums(Trees, &parse(x, algebra.bases())?, Basis::MM)?),
        Algebra::Tc => expand_classes(
            SignClasses,
            &to_sums(SignClasses, &parse(x, algebra.bases())?, Basis::MC)?,
        ),
        Algebra::WqsymDual => {
            return Err(Error::Unsupported(
                "polynomial realizations exist for wqsym, td and tc".into(),
            ))
        }
    };
    guard(degree(&m), limit)?;
    Ok(m)
}

/// Polynomial realization, one word per term.
pub fn expand(algebra: Algebra, x: &str, alphabet: u32, limit: usize) -> Result<String> {
    let p = realize(&in_m(algebra, x, limit)?, alphabet);
    if p.is_zero() {
        return Ok("0".into());
    }
    let mut out = String::new();
    for (i, (w, c)) in p.iter().enumerate() {
        let negative = *c < hopfcomb::Q::default();
        let abs = if negative { -c.clone() } else { c.clone() };
        out.push_str(match (i, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let word = if w.is_empty() { "1".to_string() } else { w.to_string() };
        if abs == hopfcomb::freemod::q(1) {
            out.push_str(&word);
        } else {
            out.push_str(&format!("{abs}*{word}"));
        }
    }
    Ok(out)
}
