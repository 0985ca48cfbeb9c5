use std::path::{Path, PathBuf};

use hopf_crossed::action::check_action;
use hopf_crossed::catalog::{algebra_by_name, conj_a3_s3, conj_c3_s3, group_by_name, self_conj_s3};
use hopf_crossed::exactla::{Echelon, Field};
use hopf_crossed::hopfcore::{base_field, check_hopf, group_algebra, FiniteGroup};
use hopf_crossed::morphism::{check_morphism, SubHopf};
use hopf_crossed::square::*;
use hopf_crossed::xmod::*;
use hopf_crossed::{CheckMode, Config, Error, Report};

use crate::manifest::{Loader, Object, Writer};

/// What a command produced: a report to print, files written, or both.
#[derive(Default)]
pub struct Outcome {
    pub reports: Vec<Report>,
    pub written: Vec<PathBuf>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

fn dim_of(object: &Object) -> usize {
    match object {
        Object::Hopf(h) => h.dim(),
        Object::Group(g) => g.order(),
        Object::Morphism(f) => f.dom.dim().max(f.cod.dim()),
        Object::Action(a) => a.acting.dim().max(a.acted.dim()),
        Object::Xmod(cm) => cm.module.dim().max(cm.base.dim()),
        Object::Cat1(c) => c.graph.arrows.dim(),
        Object::Square(sq) => sq.largest_dim(),
        Object::TwoAction(a) => a.largest_dim(),
        Object::Pt2(s) => s.total.dim(),
        Object::Cat2(c) => c.base.total.dim(),
        Object::GroupSquare(g) => g.apex().order().max(g.base().order()),
    }
}

fn check_group(g: &FiniteGroup) -> Report {
    let mut report = Report::new(format!("group {}", g.name()), CheckMode::Full);
    report.record("group axioms", true, Some(format!("order {}", g.order())));
    report.finish()
}

pub fn check(kind: &str, path: &Path, field: Option<Field>, cfg: &Config) -> Result<Outcome, Error> {
    let object = Loader::new(field).load(path, kind)?;
    let mode = cfg.explicit_mode(dim_of(&object));
    let report = match &object {
        Object::Hopf(h) => check_hopf(h, mode),
        Object::Group(g) => check_group(g),
        Object::Morphism(f) => check_morphism(f, mode),
        Object::Action(a) => check_action(a, mode),
        Object::Xmod(cm) => check_crossed_module(cm, mode),
        Object::Cat1(c) => check_cat1(c, mode, cfg.budget)?,
        Object::Square(sq) => check_crossed_square(sq, mode),
        Object::TwoAction(a) => check_2action(a, mode),
        Object::Pt2(s) => check_split_epi2(s, mode),
        Object::Cat2(c) => check_cat2(c, mode, cfg.budget)?,
        Object::GroupSquare(g) => check_group_square(g, mode),
    };
    Ok(Outcome { reports: vec![report], written: Vec::new() })
}

pub const CONVERSIONS: [(&str, &str); 9] = [
    ("xmod", "cat1"),
    ("cat1", "xmod"),
    ("square", "cat2"),
    ("cat2", "square"),
    ("2action", "pt2"),
    ("pt2", "2action"),
    ("group_square", "square"),
    ("square", "group_square"),
    ("square", "2action"),
];

fn field_of(object: &Object) -> Field {
    match object {
        Object::Hopf(h) => h.field(),
        Object::Group(_) | Object::GroupSquare(_) => Field::Rationals,
        Object::Morphism(f) => f.dom.field(),
        Object::Action(a) => a.acted.field(),
        Object::Xmod(cm) => cm.base.field(),
        Object::Cat1(c) => c.graph.objects.field(),
        Object::Square(sq) => sq.base().field(),
        Object::TwoAction(a) => a.base.field(),
        Object::Pt2(s) => s.total.field(),
        Object::Cat2(c) => c.base.total.field(),
    }
}

pub fn convert(from: &str, to: &str, path: &Path, out: &Path, field: Option<Field>, cfg: &Config) -> Result<Outcome, Error> {
    if !CONVERSIONS.contains(&(from, to)) {
        let known: Vec<String> = CONVERSIONS.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        return Err(Error::Input(format!("no conversion from {from} to {to}; available: {}", known.join(", "))));
    }
    let object = Loader::new(field).load(path, from)?;
    let converted = match object {
        Object::Xmod(cm) => Object::Cat1(xmod_to_cat1(&cm, cfg)?),
        Object::Cat1(c) => Object::Xmod(cat1_to_xmod(&c, cfg)?.0),
        Object::Square(sq) if to == "cat2" => Object::Cat2(square_to_cat2(&sq, cfg)?.cat2),
        Object::Square(sq) if to == "2action" => Object::TwoAction(square_to_2action_checked(&sq, cfg)?),
        Object::Square(sq) => Object::GroupSquare(extract_group_square(&sq)?),
        Object::Cat2(c) => Object::Square(cat2_to_square(&c, cfg)?.0),
        Object::TwoAction(a) => Object::Pt2(two_action_to_pt2(&a, cfg)?.pt2),
        Object::Pt2(s) => Object::TwoAction(pt2_to_2action(&s, cfg)?.0),
        Object::GroupSquare(g) => Object::Square(lift_group_square(&g, field.unwrap_or(Field::Rationals), cfg)?),
        _ => unreachable!("conversion table covers every source kind"),
    };
    let target_field = field.unwrap_or_else(|| field_of(&converted));
    let written = Writer::new(out, target_field).write(&converted)?;
    Ok(Outcome { reports: Vec::new(), written })
}

pub fn roundtrip(kind: &str, path: &Path, field: Option<Field>, cfg: &Config) -> Result<Outcome, Error> {
    let object = Loader::new(field).load(path, kind)?;
    let reports = match &object {
        Object::Xmod(cm) => {
            let forward = xmod_roundtrip(cm, cfg)?;
            let (backward, _) = cat1_roundtrip(&xmod_to_cat1(cm, cfg)?, cfg)?;
            vec![forward, backward]
        }
        Object::TwoAction(a) => {
            let forward = two_action_roundtrip(a, cfg)?;
            let (backward, _) = pt2_roundtrip(&two_action_to_pt2(a, cfg)?.pt2, cfg)?;
            vec![forward, backward]
        }
        Object::Square(sq) => {
            let forward = square_roundtrip(sq, cfg)?;
            let built = square_to_cat2(sq, cfg)?;
            let (_, mut phi) = phi_collapse(&built.cat2, cfg)?;
            phi.record("comparison dimension", true, Some(built.cat2.base.total.dim().to_string()));
            vec![forward, phi]
        }
        _ => return Err(Error::Input(format!("round trips exist for xmod, 2action and square, not {kind}"))),
    };
    Ok(Outcome { reports, written: Vec::new() })
}

/// Parameters of `gen`.
pub struct GenParams<'a> {
    pub group: Option<&'a str>,
    pub algebra: Option<&'a str>,
    pub xmod: Option<&'a str>,
    pub horizontal: Option<&'a str>,
    pub vertical: Option<&'a str>,
}

pub const GENERATORS: [&str; 9] =
    ["algebra", "group", "xmod", "normal-pair", "group-normal-pair", "unit", "discrete", "crossed-module", "shadow"];

fn named_algebra(name: &str, field: Field) -> Result<hopf_crossed::hopfcore::FinHopf, Error> {
    if name.eq_ignore_ascii_case("k") {
        return Ok(base_field(field));
    }
    let bare = name.strip_prefix("k_").or_else(|| name.strip_prefix("K_")).unwrap_or(name);
    let canonical = match bare.to_ascii_lowercase().as_str() {
        "v4" | "c2xc2" => "C2xC2".to_string(),
        _ => bare.to_ascii_uppercase().replace('X', "x"),
    };
    algebra_by_name(&canonical, field)
}

fn named_group(name: &str) -> Result<FiniteGroup, Error> {
    match name.to_ascii_lowercase().as_str() {
        "v4" | "c2xc2" => group_by_name("C2xC2"),
        _ => group_by_name(&name.to_ascii_uppercase().replace('X', "x")),
    }
}

fn named_xmod(name: &str, field: Field, cfg: &Config) -> Result<CrossedModule, Error> {
    match name {
        "conj_a3_s3" => conj_a3_s3(field, cfg),
        "conj_c3_s3" => conj_c3_s3(field, cfg),
        "self_conj_s3" => self_conj_s3(field, cfg),
        other => match other.strip_prefix("discrete_") {
            Some(algebra) => Ok(CrossedModule::discrete(&named_algebra(algebra, field)?)),
            None => Err(Error::Input(format!(
                "unknown crossed module {other:?}; known: conj_a3_s3, conj_c3_s3, self_conj_s3, discrete_<group>"
            ))),
        },
    }
}

fn element_list(g: &FiniteGroup, text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|label| {
            let label = label.trim();
            g.labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::Input(format!("{} has no element {label:?}; elements: {}", g.name(), g.labels().join(" "))))
        })
        .collect()
}

/// The two subgroups of a normal pair: given by labels, or the coordinate
/// subgroups of the Klein four-group.
fn pair_elements(g: &FiniteGroup, p: &GenParams) -> Result<(Vec<usize>, Vec<usize>), Error> {
    match (p.horizontal, p.vertical) {
        (Some(h), Some(v)) => Ok((element_list(g, h)?, element_list(g, v)?)),
        (None, None) if g.name() == "C2xC2" => Ok((vec![0, 2], vec![0, 1])),
        _ => Err(Error::Input("give both --horizontal and --vertical as comma-separated element labels".into())),
    }
}

fn need<'a>(value: Option<&'a str>, flag: &str, name: &str) -> Result<&'a str, Error> {
    value.ok_or_else(|| Error::Input(format!("gen {name} needs --{flag}")))
}

pub fn generate(name: &str, p: &GenParams, out: &Path, field: Field, cfg: &Config) -> Result<Outcome, Error> {
    let object = match name {
        "algebra" => Object::Hopf(named_algebra(need(p.algebra.or(p.group), "algebra", name)?, field)?),
        "group" => Object::Group(named_group(need(p.group, "group", name)?)?),
        "xmod" => Object::Xmod(named_xmod(need(p.xmod, "xmod", name)?, field, cfg)?),
        "normal-pair" => {
            let g = named_group(need(p.group, "group", name)?)?;
            let (horizontal, vertical) = pair_elements(&g, p)?;
            let h = group_algebra(&g, field);
            let span = |elems: &[usize]| Echelon::span(field, h.dim(), &elems.iter().map(|&i| h.basis(i)).collect::<Vec<_>>());
            let label = |elems: &[usize]| subgroup_name(&g, elems);
            let first = SubHopf::new(label(&horizontal), &h, span(&horizontal))?;
            let second = SubHopf::new(label(&vertical), &h, span(&vertical))?;
            Object::Square(examples::normal_pair(&first, &second, cfg)?)
        }
        "group-normal-pair" => {
            let g = named_group(need(p.group, "group", name)?)?;
            let (horizontal, vertical) = pair_elements(&g, p)?;
            Object::GroupSquare(GroupCrossedSquare::normal_pair(&g, &horizontal, &vertical)?)
        }
        "unit" => Object::Square(examples::unit(&named_algebra(need(p.algebra, "algebra", name)?, field)?, cfg)?),
        "discrete" => Object::Square(examples::discrete(&named_xmod(need(p.xmod, "xmod", name)?, field, cfg)?, cfg)?),
        "crossed-module" => {
            Object::Square(examples::from_crossed_module(&named_xmod(need(p.xmod, "xmod", name)?, field, cfg)?, cfg)?)
        }
        "shadow" => Object::Square(examples::finite_shadow(&named_xmod(need(p.xmod, "xmod", name)?, field, cfg)?, cfg)?),
        other => return Err(Error::Input(format!("unknown generator {other:?}; known: {}", GENERATORS.join(", ")))),
    };
    let written = Writer::new(out, field).write(&object)?;
    Ok(Outcome { reports: Vec::new(), written })
}

fn subgroup_name(g: &FiniteGroup, elems: &[usize]) -> String {
    let gens: Vec<&str> = elems.iter().filter(|&&e| e != g.identity()).map(|&e| g.labels()[e].as_str()).collect();
    if gens.is_empty() {
        "1".to_string()
    } else {
        format!("K<{}>", gens.join(","))
    }
}
