//! Reading and writing manifest files.
//!
//! A manifest is a JSON object `{"schema_version": "1", "kind", "field", "payload"}`.
//! Components are referenced either by a path relative to the referring
//! file or by an inline manifest. Linear maps are stored as sparse tensors
//! `{"shape": [...], "entries": [[index..., "scalar"], ...]}` whose shape
//! lists the input dimensions followed by the output dimensions.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use hopf_crossed::action::HopfAction;
use hopf_crossed::exactla::{Field, FieldElem, LinMap, SparseVec};
use hopf_crossed::hopfcore::{FinHopf, FiniteGroup, GroupAction, GroupHom, HopfParts};
use hopf_crossed::morphism::HopfMorphism;
use hopf_crossed::square::{CrossedSquare, Cat2, GroupCrossedSquare, Hopf2Action, SplitEpi2};
use hopf_crossed::xmod::{Cat1, CrossedModule, ReflexiveGraph};
use hopf_crossed::Error;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

pub const KINDS: [&str; 11] =
    ["hopf", "group", "morphism", "action", "xmod", "cat1", "square", "2action", "pt2", "cat2", "group_square"];

/// Any object a manifest can describe.
pub enum Object {
    Hopf(FinHopf),
    Group(FiniteGroup),
    Morphism(HopfMorphism),
    Action(HopfAction),
    Xmod(CrossedModule),
    Cat1(Cat1),
    Square(CrossedSquare),
    TwoAction(Hopf2Action),
    Pt2(SplitEpi2),
    Cat2(Cat2),
    GroupSquare(GroupCrossedSquare),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Hopf(_) => "hopf",
            Object::Group(_) => "group",
            Object::Morphism(_) => "morphism",
            Object::Action(_) => "action",
            Object::Xmod(_) => "xmod",
            Object::Cat1(_) => "cat1",
            Object::Square(_) => "square",
            Object::TwoAction(_) => "2action",
            Object::Pt2(_) => "pt2",
            Object::Cat2(_) => "cat2",
            Object::GroupSquare(_) => "group_square",
        }
    }
}

/// Where in which file a value sits, for error messages.
#[derive(Clone)]
struct At {
    file: PathBuf,
    pointer: String,
}

impl At {
    fn key(&self, key: &str) -> At {
        At { file: self.file.clone(), pointer: format!("{}/{key}", self.pointer) }
    }

    fn index(&self, i: usize) -> At {
        At { file: self.file.clone(), pointer: format!("{}/{i}", self.pointer) }
    }

    fn err(&self, msg: impl std::fmt::Display) -> Error {
        let pointer = if self.pointer.is_empty() { "/" } else { &self.pointer };
        Error::Input(format!("{}: {pointer}: {msg}", self.file.display()))
    }
}

/// A resolved manifest: its kind, payload and location.
struct Doc {
    kind: String,
    payload: Value,
    at: At,
}

/// Loads manifests, sharing algebras and groups that are referenced by the
/// same file more than once.
pub struct Loader {
    forced: Option<Field>,
    field: Option<Field>,
    hopf_cache: HashMap<PathBuf, FinHopf>,
    group_cache: HashMap<PathBuf, FiniteGroup>,
}

impl Loader {
    /// `field` overrides the field declared by the manifests.
    pub fn new(field: Option<Field>) -> Loader {
        Loader { forced: field, field, hopf_cache: HashMap::new(), group_cache: HashMap::new() }
    }

    /// Loads the manifest at `path`, which must be of kind `expected`.
    pub fn load(&mut self, path: &Path, expected: &str) -> Result<Object, Error> {
        let at = At { file: path.to_path_buf(), pointer: String::new() };
        let doc = self.read_file(path, &at)?;
        if doc.kind != expected {
            return Err(at.key("kind").err(format!("expected kind {expected:?}, found {:?}", doc.kind)));
        }
        let field = self.field.expect("set while reading the header");
        let p = &doc.payload;
        let at = &doc.at;
        Ok(match expected {
            "hopf" => Object::Hopf(self.hopf_payload(p, at, field)?),
            "group" => Object::Group(group_payload(p, at)?),
            "morphism" => Object::Morphism(self.morphism_payload(p, at, field)?),
            "action" => Object::Action(self.action_payload(p, at, field)?),
            "xmod" => Object::Xmod(self.xmod_payload(p, at, field)?),
            "cat1" => Object::Cat1(self.cat1_payload(p, at, field)?),
            "square" => Object::Square(self.square_payload(p, at, field)?),
            "2action" => Object::TwoAction(self.two_action_payload(p, at, field)?),
            "pt2" => Object::Pt2(self.pt2_payload(p, at, field)?),
            "cat2" => Object::Cat2(self.cat2_payload(p, at, field)?),
            "group_square" => Object::GroupSquare(self.group_square_payload(p, at)?),
            other => return Err(at.key("kind").err(format!("unknown kind {other:?}"))),
        })
    }

    fn read_file(&mut self, path: &Path, from: &At) -> Result<Doc, Error> {
        let text = fs::read_to_string(path).map_err(|e| from.err(format!("cannot read {}: {e}", path.display())))?;
        let at = At { file: path.to_path_buf(), pointer: String::new() };
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| at.err(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column())))?;
        self.header(value, at)
    }

    fn header(&mut self, mut value: Value, at: At) -> Result<Doc, Error> {
        let Some(obj) = value.as_object_mut() else {
            return Err(at.err("a manifest must be a JSON object"));
        };
        match obj.get("schema_version").and_then(Value::as_str) {
            Some(SCHEMA_VERSION) => {}
            Some(other) => return Err(at.key("schema_version").err(format!("unsupported schema version {other:?}"))),
            None => return Err(at.key("schema_version").err("missing schema version")),
        }
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .filter(|k| KINDS.contains(k))
            .ok_or_else(|| at.key("kind").err(format!("kind must be one of {KINDS:?}")))?
            .to_string();
        let declared: Field = obj
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| at.key("field").err("missing field"))?
            .parse()
            .map_err(|e: Error| at.key("field").err(e))?;
        match (self.forced, self.field) {
            (Some(_), _) => {}
            (None, None) => self.field = Some(declared),
            (None, Some(f)) if f != declared => {
                return Err(at.key("field").err(format!("declares {declared} but the referring manifest uses {f}")));
            }
            (None, Some(_)) => {}
        }
        let payload = obj.remove("payload").ok_or_else(|| at.key("payload").err("missing payload"))?;
        Ok(Doc { kind, payload, at: at.key("payload") })
    }

    /// Follows a reference: a relative path or an inline manifest.
    fn deref(&mut self, v: &Value, at: &At, expected: &str) -> Result<(Doc, Option<PathBuf>), Error> {
        let doc = match v {
            Value::String(rel) => {
                let base = at.file.parent().unwrap_or(Path::new("."));
                let path = base.join(rel);
                let doc = self.read_file(&path, at)?;
                let key = fs::canonicalize(&path).unwrap_or(path);
                (doc, Some(key))
            }
            Value::Object(_) => (self.header(v.clone(), at.clone())?, None),
            _ => return Err(at.err(format!("expected a path or an inline {expected} manifest"))),
        };
        if doc.0.kind != expected {
            return Err(at.err(format!("reference is a {:?} manifest, expected {expected:?}", doc.0.kind)));
        }
        Ok(doc)
    }

    fn hopf_ref(&mut self, v: &Value, at: &At, field: Field) -> Result<FinHopf, Error> {
        if let Value::String(_) = v {
            let (doc, key) = self.deref(v, at, "hopf")?;
            let key = key.expect("file reference");
            if let Some(h) = self.hopf_cache.get(&key) {
                return Ok(h.clone());
            }
            let h = self.hopf_payload(&doc.payload, &doc.at, field)?;
            self.hopf_cache.insert(key, h.clone());
            return Ok(h);
        }
        let (doc, _) = self.deref(v, at, "hopf")?;
        self.hopf_payload(&doc.payload, &doc.at, field)
    }

    fn group_ref(&mut self, v: &Value, at: &At) -> Result<FiniteGroup, Error> {
        let (doc, key) = self.deref(v, at, "group")?;
        if let Some(g) = key.as_ref().and_then(|k| self.group_cache.get(k)) {
            return Ok(g.clone());
        }
        let g = group_payload(&doc.payload, &doc.at)?;
        if let Some(k) = key {
            self.group_cache.insert(k, g.clone());
        }
        Ok(g)
    }

    fn hopf_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<FinHopf, Error> {
        let n = usize_field(p, at, "dim")?;
        let name = str_field(p, at, "name")?.to_string();
        let labels = match p.get("labels") {
            None => (0..n).map(|i| format!("e{i}")).collect(),
            Some(v) => string_list(v, &at.key("labels"))?,
        };
        if labels.len() != n {
            return Err(at.key("labels").err(format!("expected {n} labels, found {}", labels.len())));
        }
        let grouplike = match p.get("grouplike") {
            None | Some(Value::Null) => None,
            Some(Value::Array(flags)) => Some(
                flags
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.as_bool().ok_or_else(|| at.key("grouplike").index(i).err("expected a boolean")))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            Some(_) => return Err(at.key("grouplike").err("expected an array of booleans")),
        };
        if grouplike.as_ref().is_some_and(|g| g.len() != n) {
            return Err(at.key("grouplike").err(format!("expected {n} flags")));
        }
        let tensor = |key: &str, inputs: &[usize], outputs: &[usize]| {
            read_tensor(p.get(key), &at.key(key), field, inputs, outputs)
        };
        let unit = tensor("unit", &[], &[n])?.col(0).into_owned();
        let parts = HopfParts {
            name,
            field,
            labels,
            mult: tensor("mult", &[n, n], &[n])?,
            unit,
            comult: tensor("comult", &[n], &[n, n])?,
            counit: tensor("counit", &[n], &[])?,
            antipode: tensor("antipode", &[n], &[n])?,
            grouplike,
        };
        FinHopf::new(parts).map_err(|e| at.err(e))
    }

    /// A map between known algebras: either a bare sparse tensor or a
    /// morphism manifest whose ends must have the right dimensions.
    fn map_between(&mut self, v: Option<&Value>, at: &At, field: Field, dom: &FinHopf, cod: &FinHopf) -> Result<HopfMorphism, Error> {
        let map = match v {
            Some(v @ (Value::String(_) | Value::Object(_))) if is_reference(v) => {
                let (doc, _) = self.deref(v, at, "morphism")?;
                self.morphism_payload(&doc.payload, &doc.at, field)?.map
            }
            other => read_tensor(other, at, field, &[dom.dim()], &[cod.dim()])?,
        };
        HopfMorphism::new(dom, cod, map).map_err(|e| at.err(e))
    }

    fn action_between(&mut self, v: Option<&Value>, at: &At, field: Field, acting: &FinHopf, acted: &FinHopf) -> Result<HopfAction, Error> {
        let map = match v {
            Some(v) if is_reference(v) => {
                let (doc, _) = self.deref(v, at, "action")?;
                self.action_payload(&doc.payload, &doc.at, field)?.map
            }
            other => read_tensor(other, at, field, &[acting.dim(), acted.dim()], &[acted.dim()])?,
        };
        HopfAction::new(acting, acted, map).map_err(|e| at.err(e))
    }

    fn corner(&mut self, p: &Value, at: &At, field: Field, key: &str) -> Result<FinHopf, Error> {
        let v = p.get(key).ok_or_else(|| at.key(key).err("missing"))?;
        self.hopf_ref(v, &at.key(key), field)
    }

    fn morphism_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<HopfMorphism, Error> {
        let dom = self.corner(p, at, field, "dom")?;
        let cod = self.corner(p, at, field, "cod")?;
        let map = read_tensor(p.get("matrix"), &at.key("matrix"), field, &[dom.dim()], &[cod.dim()])?;
        HopfMorphism::new(&dom, &cod, map).map_err(|e| at.err(e))
    }

    fn action_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<HopfAction, Error> {
        let acting = self.corner(p, at, field, "acting")?;
        let acted = self.corner(p, at, field, "acted")?;
        let map = read_tensor(p.get("map"), &at.key("map"), field, &[acting.dim(), acted.dim()], &[acted.dim()])?;
        HopfAction::new(&acting, &acted, map).map_err(|e| at.err(e))
    }

    fn xmod_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<CrossedModule, Error> {
        let module = self.corner(p, at, field, "module")?;
        let base = self.corner(p, at, field, "base")?;
        let boundary = self.map_between(p.get("boundary"), &at.key("boundary"), field, &module, &base)?;
        let action = self.action_between(p.get("action"), &at.key("action"), field, &base, &module)?;
        CrossedModule::unchecked(&boundary, &action).map_err(|e| at.err(e))
    }

    fn cat1_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<Cat1, Error> {
        let arrows = self.corner(p, at, field, "arrows")?;
        let objects = self.corner(p, at, field, "objects")?;
        let graph = ReflexiveGraph {
            source: self.map_between(p.get("source"), &at.key("source"), field, &arrows, &objects)?,
            target: self.map_between(p.get("target"), &at.key("target"), field, &arrows, &objects)?,
            identity: self.map_between(p.get("identity"), &at.key("identity"), field, &objects, &arrows)?,
            arrows,
            objects,
        };
        Ok(Cat1 { graph, origin: None })
    }

    fn square_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<CrossedSquare, Error> {
        let [apex, horizontal, vertical, base] =
            ["apex", "horizontal", "vertical", "base"].map(|k| self.corner(p, at, field, k));
        let (apex, horizontal, vertical, base) = (apex?, horizontal?, vertical?, base?);
        let mut map = |key: &str, dom: &FinHopf, cod: &FinHopf| self.map_between(p.get(key), &at.key(key), field, dom, cod);
        let top = map("top", &apex, &horizontal)?;
        let left = map("left", &apex, &vertical)?;
        let right = map("right", &horizontal, &base)?;
        let bottom = map("bottom", &vertical, &base)?;
        let mut act = |key: &str, acted: &FinHopf| self.action_between(p.get(key), &at.key(key), field, &base, acted);
        let on_apex = act("base_on_apex", &apex)?;
        let on_horizontal = act("base_on_horizontal", &horizontal)?;
        let on_vertical = act("base_on_vertical", &vertical)?;
        let pairing = read_tensor(p.get("pairing"), &at.key("pairing"), field, &[horizontal.dim(), vertical.dim()], &[apex.dim()])?;
        CrossedSquare::unchecked(&top, &left, &right, &bottom, [&on_apex, &on_horizontal, &on_vertical], pairing)
            .map_err(|e| at.err(e))
    }

    fn two_action_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<Hopf2Action, Error> {
        let [apex, horizontal, vertical, base] =
            ["apex", "horizontal", "vertical", "base"].map(|k| self.corner(p, at, field, k));
        let (apex, horizontal, vertical, base) = (apex?, horizontal?, vertical?, base?);
        let mut act = |key: &str, acting: &FinHopf, acted: &FinHopf| {
            self.action_between(p.get(key), &at.key(key), field, acting, acted)
        };
        let base_on_apex = act("base_on_apex", &base, &apex)?;
        let base_on_horizontal = act("base_on_horizontal", &base, &horizontal)?;
        let base_on_vertical = act("base_on_vertical", &base, &vertical)?;
        let horizontal_on_apex = act("horizontal_on_apex", &horizontal, &apex)?;
        let vertical_on_apex = act("vertical_on_apex", &vertical, &apex)?;
        let pairing = read_tensor(p.get("pairing"), &at.key("pairing"), field, &[horizontal.dim(), vertical.dim()], &[apex.dim()])?;
        Hopf2Action::unchecked(&base_on_apex, &base_on_horizontal, &base_on_vertical, &horizontal_on_apex, &vertical_on_apex, pairing)
            .map_err(|e| at.err(e))
    }

    fn pt2_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<SplitEpi2, Error> {
        let [total, first, second] = ["total", "first", "second"].map(|k| self.corner(p, at, field, k));
        let (total, first, second) = (total?, first?, second?);
        let mut map = |key: &str, dom: &FinHopf, cod: &FinHopf| self.map_between(p.get(key), &at.key(key), field, dom, cod);
        let first_inclusion = map("first_inclusion", &first, &total)?;
        let first_retraction = map("first_retraction", &total, &first)?;
        let second_inclusion = map("second_inclusion", &second, &total)?;
        let second_retraction = map("second_retraction", &total, &second)?;
        SplitEpi2::unchecked(&first_inclusion, &first_retraction, &second_inclusion, &second_retraction).map_err(|e| at.err(e))
    }

    fn cat2_payload(&mut self, p: &Value, at: &At, field: Field) -> Result<Cat2, Error> {
        let base = self.pt2_payload(p, at, field)?;
        let first_target = self.map_between(p.get("first_target"), &at.key("first_target"), field, &base.total, &base.first)?;
        let second_target =
            self.map_between(p.get("second_target"), &at.key("second_target"), field, &base.total, &base.second)?;
        Cat2::unchecked(base, &first_target, &second_target).map_err(|e| at.err(e))
    }

    fn group_square_payload(&mut self, p: &Value, at: &At) -> Result<GroupCrossedSquare, Error> {
        let mut corner = |key: &str| {
            let v = p.get(key).ok_or_else(|| at.key(key).err("missing"))?;
            self.group_ref(v, &at.key(key))
        };
        let (apex, horizontal, vertical, base) = (corner("apex")?, corner("horizontal")?, corner("vertical")?, corner("base")?);
        let hom = |key: &str, dom: &FiniteGroup, cod: &FiniteGroup| {
            let map = index_list(p.get(key), &at.key(key))?;
            GroupHom::unchecked(dom, cod, map).map_err(|e| at.key(key).err(e))
        };
        let act = |key: &str, acted: &FiniteGroup| {
            let table = index_table(p.get(key), &at.key(key))?;
            GroupAction::unchecked(&base, acted, table).map_err(|e| at.key(key).err(e))
        };
        let pairing = index_table(p.get("pairing"), &at.key("pairing"))?;
        let fits = pairing.len() == horizontal.order()
            && pairing.iter().all(|row| row.len() == vertical.order() && row.iter().all(|&l| l < apex.order()));
        if !fits {
            return Err(at.key("pairing").err("pairing table does not fit the corners"));
        }
        Ok(GroupCrossedSquare {
            top: hom("top", &apex, &horizontal)?,
            left: hom("left", &apex, &vertical)?,
            right: hom("right", &horizontal, &base)?,
            bottom: hom("bottom", &vertical, &base)?,
            base_on_apex: act("base_on_apex", &apex)?,
            base_on_horizontal: act("base_on_horizontal", &horizontal)?,
            base_on_vertical: act("base_on_vertical", &vertical)?,
            pairing,
        })
    }
}

fn is_reference(v: &Value) -> bool {
    v.is_string() || v.get("schema_version").is_some()
}

fn str_field<'a>(p: &'a Value, at: &At, key: &str) -> Result<&'a str, Error> {
    p.get(key).and_then(Value::as_str).ok_or_else(|| at.key(key).err("expected a string"))
}

fn usize_field(p: &Value, at: &At, key: &str) -> Result<usize, Error> {
    p.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| at.key(key).err("expected a non-negative integer"))
}

fn string_list(v: &Value, at: &At) -> Result<Vec<String>, Error> {
    let items = v.as_array().ok_or_else(|| at.err("expected an array of strings"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, s)| s.as_str().map(str::to_string).ok_or_else(|| at.index(i).err("expected a string")))
        .collect()
}

fn index_list(v: Option<&Value>, at: &At) -> Result<Vec<usize>, Error> {
    let items = v.and_then(Value::as_array).ok_or_else(|| at.err("expected an array of indices"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| x.as_u64().map(|x| x as usize).ok_or_else(|| at.index(i).err("expected an index")))
        .collect()
}

fn index_table(v: Option<&Value>, at: &At) -> Result<Vec<Vec<usize>>, Error> {
    let rows = v.and_then(Value::as_array).ok_or_else(|| at.err("expected a table of indices"))?;
    rows.iter().enumerate().map(|(i, row)| index_list(Some(row), &at.index(i))).collect()
}

fn group_payload(p: &Value, at: &At) -> Result<FiniteGroup, Error> {
    let name = str_field(p, at, "name")?;
    let labels = string_list(p.get("labels").unwrap_or(&Value::Null), &at.key("labels"))?;
    let table = index_table(p.get("table"), &at.key("table"))?;
    FiniteGroup::new(name, labels, table).map_err(|e| at.err(e))
}

/// Reads a sparse tensor into a linear map from the flattened inputs to
/// the flattened outputs, both indexed left-major.
fn read_tensor(v: Option<&Value>, at: &At, field: Field, inputs: &[usize], outputs: &[usize]) -> Result<LinMap, Error> {
    let v = v.ok_or_else(|| at.err("missing"))?;
    let shape = index_list(v.get("shape"), &at.key("shape"))?;
    let expected: Vec<usize> = inputs.iter().chain(outputs).copied().collect();
    if shape != expected {
        return Err(at.key("shape").err(format!("expected shape {expected:?}, found {shape:?}")));
    }
    let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| at.key("entries").err("expected an array"))?;
    let (dom, cod) = (inputs.iter().product::<usize>(), outputs.iter().product::<usize>());
    let mut cols: Vec<BTreeMap<usize, FieldElem>> = vec![BTreeMap::new(); dom];
    for (i, e) in entries.iter().enumerate() {
        let at = at.key("entries").index(i);
        let items = e.as_array().filter(|a| a.len() == shape.len() + 1).ok_or_else(|| {
            at.err(format!("expected {} indices followed by a scalar", shape.len()))
        })?;
        let mut idx = Vec::with_capacity(shape.len());
        for (k, (x, &bound)) in items.iter().zip(&shape).enumerate() {
            match x.as_u64() {
                Some(x) if (x as usize) < bound => idx.push(x as usize),
                _ => return Err(at.index(k).err(format!("index must be below {bound}"))),
            }
        }
        let scalar = match &items[shape.len()] {
            Value::String(s) => field.parse(s),
            Value::Number(n) => field.parse(&n.to_string()),
            _ => return Err(at.index(shape.len()).err("expected a scalar string")),
        }
        .map_err(|e| at.index(shape.len()).err(e))?;
        let col = flatten(&idx[..inputs.len()], inputs);
        let row = flatten(&idx[inputs.len()..], outputs);
        if cols[col].insert(row, scalar).is_some() {
            return Err(at.err("duplicate entry"));
        }
    }
    let columns = cols
        .into_iter()
        .map(|c| SparseVec::from_entries(field, cod, c.into_iter().filter(|(_, x)| !x.is_zero()).collect()))
        .collect();
    Ok(LinMap::from_columns(field, dom, cod, columns))
}

fn flatten(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (&i, &n)| acc * n + i)
}

fn unflatten(mut k: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for (slot, &n) in idx.iter_mut().zip(shape).rev() {
        *slot = k % n;
        k /= n;
    }
    idx
}

fn write_tensor(map: &LinMap, inputs: &[usize], outputs: &[usize]) -> Value {
    let mut entries = Vec::new();
    for j in 0..map.dom() {
        let input = unflatten(j, inputs);
        for (row, c) in map.col(j).entries() {
            let mut e: Vec<Value> = input.iter().chain(&unflatten(*row, outputs)).map(|&i| json!(i)).collect();
            e.push(json!(c.to_text()));
            entries.push(Value::Array(e));
        }
    }
    let shape: Vec<usize> = inputs.iter().chain(outputs).copied().collect();
    json!({ "shape": shape, "entries": entries })
}

/// Collects an output manifest and its component files.
pub struct Writer {
    dir: PathBuf,
    stem: String,
    field: Field,
    files: Vec<(String, String)>,
    by_content: HashMap<String, String>,
}

impl Writer {
    /// Components of `out` are written next to it as `<stem>.<role>.json`.
    pub fn new(out: &Path, field: Field) -> Writer {
        let dir = out.parent().map(Path::to_path_buf).unwrap_or_default();
        let name = out.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out.json".into());
        let stem = name.strip_suffix(".json").unwrap_or(&name).to_string();
        Writer { dir, stem, field, files: Vec::new(), by_content: HashMap::new() }
    }

    fn manifest(&self, kind: &str, payload: Value) -> Value {
        json!({ "schema_version": SCHEMA_VERSION, "kind": kind, "field": self.field.to_string(), "payload": payload })
    }

    fn component(&mut self, role: &str, kind: &str, payload: Value) -> Value {
        let text = render(&self.manifest(kind, payload));
        if let Some(name) = self.by_content.get(&text) {
            return json!(name);
        }
        let mut name = format!("{}.{role}.json", self.stem);
        let mut k = 2;
        while self.files.iter().any(|(n, _)| *n == name) {
            name = format!("{}.{role}{k}.json", self.stem);
            k += 1;
        }
        self.by_content.insert(text.clone(), name.clone());
        self.files.push((name.clone(), text));
        json!(name)
    }

    pub fn hopf(&mut self, role: &str, h: &FinHopf) -> Value {
        let payload = hopf_value(h);
        self.component(role, "hopf", payload)
    }

    pub fn group(&mut self, role: &str, g: &FiniteGroup) -> Value {
        let payload = json!({ "name": g.name(), "labels": g.labels(), "table": g.table() });
        self.component(role, "group", payload)
    }

    /// The payload of `object`, with its algebras written as components.
    pub fn payload(&mut self, object: &Object) -> Value {
        match object {
            Object::Hopf(h) => hopf_value(h),
            Object::Group(g) => json!({ "name": g.name(), "labels": g.labels(), "table": g.table() }),
            Object::Morphism(f) => json!({
                "dom": self.hopf("dom", &f.dom),
                "cod": self.hopf("cod", &f.cod),
                "matrix": matrix(f),
            }),
            Object::Action(a) => json!({
                "acting": self.hopf("acting", &a.acting),
                "acted": self.hopf("acted", &a.acted),
                "map": action(a),
            }),
            Object::Xmod(cm) => json!({
                "module": self.hopf("module", &cm.module),
                "base": self.hopf("base", &cm.base),
                "boundary": matrix(&cm.boundary),
                "action": action(&cm.action),
            }),
            Object::Cat1(c) => {
                let g = &c.graph;
                json!({
                    "arrows": self.hopf("arrows", &g.arrows),
                    "objects": self.hopf("objects", &g.objects),
                    "source": matrix(&g.source),
                    "target": matrix(&g.target),
                    "identity": matrix(&g.identity),
                })
            }
            Object::Square(sq) => json!({
                "apex": self.hopf("apex", sq.apex()),
                "horizontal": self.hopf("horizontal", sq.horizontal()),
                "vertical": self.hopf("vertical", sq.vertical()),
                "base": self.hopf("base", sq.base()),
                "top": matrix(&sq.top),
                "left": matrix(&sq.left),
                "right": matrix(&sq.right),
                "bottom": matrix(&sq.bottom),
                "base_on_apex": action(&sq.base_on_apex),
                "base_on_horizontal": action(&sq.base_on_horizontal),
                "base_on_vertical": action(&sq.base_on_vertical),
                "pairing": write_tensor(&sq.pairing, &[sq.horizontal().dim(), sq.vertical().dim()], &[sq.apex().dim()]),
            }),
            Object::TwoAction(a) => json!({
                "apex": self.hopf("apex", &a.apex),
                "horizontal": self.hopf("horizontal", &a.horizontal),
                "vertical": self.hopf("vertical", &a.vertical),
                "base": self.hopf("base", &a.base),
                "base_on_apex": action(&a.base_on_apex),
                "base_on_horizontal": action(&a.base_on_horizontal),
                "base_on_vertical": action(&a.base_on_vertical),
                "horizontal_on_apex": action(&a.horizontal_on_apex),
                "vertical_on_apex": action(&a.vertical_on_apex),
                "pairing": write_tensor(&a.pairing, &[a.horizontal.dim(), a.vertical.dim()], &[a.apex.dim()]),
            }),
            Object::Pt2(s) => self.pt2(s),
            Object::Cat2(c) => {
                let mut p = self.pt2(&c.base);
                let obj = p.as_object_mut().expect("object");
                obj.insert("first_target".into(), matrix(&c.first_target));
                obj.insert("second_target".into(), matrix(&c.second_target));
                p
            }
            Object::GroupSquare(g) => json!({
                "apex": self.group("apex", g.apex()),
                "horizontal": self.group("horizontal", g.horizontal()),
                "vertical": self.group("vertical", g.vertical()),
                "base": self.group("base", g.base()),
                "top": g.top.map,
                "left": g.left.map,
                "right": g.right.map,
                "bottom": g.bottom.map,
                "base_on_apex": g.base_on_apex.table,
                "base_on_horizontal": g.base_on_horizontal.table,
                "base_on_vertical": g.base_on_vertical.table,
                "pairing": g.pairing,
            }),
        }
    }

    fn pt2(&mut self, s: &SplitEpi2) -> Value {
        json!({
            "total": self.hopf("total", &s.total),
            "first": self.hopf("first", &s.first),
            "second": self.hopf("second", &s.second),
            "first_inclusion": matrix(&s.first_inclusion),
            "first_retraction": matrix(&s.first_retraction),
            "second_inclusion": matrix(&s.second_inclusion),
            "second_retraction": matrix(&s.second_retraction),
        })
    }

    /// Renders `object` as the main manifest and returns every file to write,
    /// main manifest first.
    pub fn files(mut self, object: &Object) -> Vec<(PathBuf, String)> {
        let payload = self.payload(object);
        let main = render(&self.manifest(object.kind(), payload));
        let mut out = vec![(self.dir.join(format!("{}.json", self.stem)), main)];
        out.extend(self.files.into_iter().map(|(name, text)| (self.dir.join(name), text)));
        out
    }

    /// Writes the manifest and its components, returning the paths written.
    pub fn write(self, object: &Object) -> Result<Vec<PathBuf>, Error> {
        let files = self.files(object);
        let mut written = Vec::new();
        for (path, text) in files {
            fs::write(&path, text).map_err(|e| Error::Input(format!("{}: cannot write: {e}", path.display())))?;
            written.push(path);
        }
        Ok(written)
    }
}

fn hopf_value(h: &FinHopf) -> Value {
    let n = h.dim();
    let unit = LinMap::from_columns(h.field(), 1, n, vec![h.unit().clone()]);
    let mut p = json!({
        "name": h.name(),
        "dim": n,
        "labels": h.labels(),
        "mult": write_tensor(h.mult(), &[n, n], &[n]),
        "unit": write_tensor(&unit, &[], &[n]),
        "comult": write_tensor(h.comult(), &[n], &[n, n]),
        "counit": write_tensor(h.counit(), &[n], &[]),
        "antipode": write_tensor(h.antipode(), &[n], &[n]),
    });
    if let Some(flags) = h.grouplike_flags() {
        p["grouplike"] = json!(flags);
    }
    p
}

fn matrix(f: &HopfMorphism) -> Value {
    write_tensor(&f.map, &[f.dom.dim()], &[f.cod.dim()])
}

fn action(a: &HopfAction) -> Value {
    write_tensor(&a.map, &[a.acting.dim(), a.acted.dim()], &[a.acted.dim()])
}

/// Canonical JSON: sorted keys, two-space indentation, and arrays of
/// scalars kept on one line.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out.push('\n');
    out
}

fn render_into(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            let sorted: BTreeMap<&String, &Value> = map.iter().collect();
            out.push_str("{\n");
            for (i, (k, x)) in sorted.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                render_into(x, depth + 1, out);
                out.push_str(if i + 1 < sorted.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render_into(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
