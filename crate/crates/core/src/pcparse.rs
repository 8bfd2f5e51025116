//! Group input: power-commutator presentations and permutation generators.
//!
//! The commutator convention is `[x, y] = x⁻¹y⁻¹xy`.
//!
//! PC text is a sequence of statements separated by `;` or newlines, with
//! `#` starting a comment:
//!
//! ```text
//! p=3
//! gens a,b,c
//! a^3=1; b^3=1; c^3=1
//! [b,a]=c
//! ```
//!
//! Generators need not be listed in polycyclic order: the parser derives one
//! from the relations (each relation's word must sit strictly below its
//! left-hand side), preferring declaration order when free. A generator
//! without a power relation has relative order `p`; power relations may use
//! any power of `p` (`a^9=1` declares a cyclic layer of order 9).
//!
//! Permutation text starts with `perm <degree>` followed by one generator per
//! statement, in cycle notation `(0 1 2)(3 4 5)` or as an image list
//! `[1,2,0,3,4,5]`. Both formats also have a JSON form; see [`parse_group`].

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{log_p, Elem, Group, DENSE_LIMIT};

/// A word `Π g_i^{k_i}` as (generator index, exponent) pairs in declaration numbering.
pub type Word = Vec<(usize, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// `g^k = w`.
    Power { gen: usize, exp: u64, word: Word },
    /// `[x, y] = w`.
    Commutator { x: usize, y: usize, word: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    pub prime: u32,
    /// Generator names in declaration order.
    pub gens: Vec<String>,
    pub relations: Vec<Relation>,
    /// Polycyclic order: `pc_order[i]` is the declaration index of the i-th pc generator.
    pub pc_order: Vec<usize>,
    /// Relative order of each generator, by declaration index.
    pub rel_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDef {
    Pc(PcPresentation),
    Perm(PermSpec),
}

impl GroupDef {
    pub fn realize(&self, max_order: usize) -> Result<Group> {
        match self {
            GroupDef::Pc(p) => realize(p, max_order),
            GroupDef::Perm(s) => realize_perm(s, max_order),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum JsonDef {
    Pc {
        prime: u32,
        gens: Vec<String>,
        #[serde(default)]
        powers: BTreeMap<String, String>,
        #[serde(default)]
        commutators: BTreeMap<String, String>,
    },
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
    },
}

/// Parses any supported input: JSON (either type), permutation text, or PC text.
///
/// JSON PC keys are relation left-hand sides, e.g.
/// `{"type":"pc","prime":3,"gens":["a","b"],"powers":{"a^9":"1"},"commutators":{"[a,b]":"a^3"}}`.
pub fn parse_group(text: &str) -> Result<GroupDef> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return match serde_json::from_str::<JsonDef>(trimmed)? {
            JsonDef::Pc {
                prime,
                gens,
                powers,
                commutators,
            } => {
                let mut src = format!("p={prime}\ngens {}\n", gens.join(","));
                for (k, v) in powers.iter().chain(commutators.iter()) {
                    src.push_str(&format!("{k}={v}\n"));
                }
                parse_pc(&src).map(GroupDef::Pc)
            }
            JsonDef::Perm { degree, generators } => {
                let spec = PermSpec { degree, generators };
                spec.validate()?;
                Ok(GroupDef::Perm(spec))
            }
        };
    }
    let first = statements(text).next().map(|s| s.text.to_string());
    match first {
        Some(s) if s.starts_with("perm") => parse_perm(text).map(GroupDef::Perm),
        _ => parse_pc(text).map(GroupDef::Pc),
    }
}

struct Stmt<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn statements(text: &str) -> impl Iterator<Item = Stmt<'_>> {
    text.lines().enumerate().flat_map(|(ln, line)| {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut out = Vec::new();
        let mut start = 0;
        for piece in line.split(';') {
            let lead = piece.len() - piece.trim_start().len();
            let t = piece.trim();
            if !t.is_empty() {
                out.push(Stmt {
                    text: t,
                    line: ln + 1,
                    col: start + lead + 1,
                });
            }
            start += piece.len() + 1;
        }
        out
    })
}

fn syntax(st: &Stmt, offset: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: st.line,
        col: st.col + offset,
        msg: msg.into(),
    }
}

fn is_name(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

/// Parses `1` or `g(^k)?(*g(^k)?)*`; `offset` is the word's position inside the statement.
fn parse_word(st: &Stmt, src: &str, offset: usize, names: &HashMap<&str, usize>) -> Result<Word> {
    let t = src.trim();
    let offset = offset + (src.len() - src.trim_start().len());
    if t == "1" {
        return Ok(Vec::new());
    }
    if t.is_empty() {
        return Err(syntax(st, offset, "empty word"));
    }
    let mut word = Vec::new();
    let mut pos = offset;
    for factor in t.split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let f = factor.trim();
        let (name, exp) = match f.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e.trim().parse().map_err(|_| {
                    syntax(
                        st,
                        pos + lead + n.len() + 1,
                        format!("bad exponent {:?}", e.trim()),
                    )
                })?;
                (n.trim(), e)
            }
            None => (f, 1),
        };
        if !is_name(name) {
            return Err(syntax(st, pos + lead, format!("malformed factor {f:?}")));
        }
        let g = *names
            .get(name)
            .ok_or_else(|| syntax(st, pos + lead, format!("unknown generator {name:?}")))?;
        if exp != 0 {
            word.push((g, exp));
        }
        pos += factor.len() + 1;
    }
    Ok(word)
}

pub fn parse_pc(text: &str) -> Result<PcPresentation> {
    let mut prime: Option<u32> = None;
    let mut gens: Vec<String> = Vec::new();
    let mut pending: Vec<Stmt> = Vec::new();
    for st in statements(text) {
        let t = st.text;
        if let Some(rest) = t.strip_prefix("p=").or_else(|| {
            t.strip_prefix('p')
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
        }) {
            let v: u32 = rest
                .trim()
                .parse()
                .map_err(|_| syntax(&st, 2, format!("bad prime {:?}", rest.trim())))?;
            if v < 2
                || !(2..v)
                    .take_while(|d| d * d <= v)
                    .all(|d| !v.is_multiple_of(d))
            {
                return Err(syntax(&st, 2, format!("{v} is not prime")));
            }
            prime = Some(v);
        } else if let Some(rest) = t.strip_prefix("gens") {
            if !gens.is_empty() {
                return Err(syntax(&st, 0, "generators declared twice"));
            }
            for name in rest.split(',') {
                let n = name.trim();
                if !is_name(n) {
                    return Err(syntax(&st, 5, format!("bad generator name {n:?}")));
                }
                if gens.iter().any(|g| g == n) {
                    return Err(syntax(&st, 5, format!("duplicate generator {n:?}")));
                }
                gens.push(n.to_string());
            }
        } else {
            pending.push(st);
        }
    }
    let p = prime.ok_or_else(|| Error::Presentation("missing `p=<prime>`".into()))?;
    if gens.is_empty() {
        return Err(Error::Presentation("missing `gens` declaration".into()));
    }
    let names: HashMap<&str, usize> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i))
        .collect();
    let lookup = |st: &Stmt, s: &str, off: usize| -> Result<usize> {
        names
            .get(s.trim())
            .copied()
            .ok_or_else(|| syntax(st, off, format!("unknown generator {:?}", s.trim())))
    };
    let mut relations = Vec::new();
    let mut rel_orders = vec![p as u64; gens.len()];
    let mut has_power = vec![false; gens.len()];
    let mut seen_pairs = std::collections::HashSet::new();
    for st in &pending {
        let t = st.text;
        let (lhs, rhs) = t
            .split_once('=')
            .ok_or_else(|| syntax(st, 0, format!("unrecognised statement {t:?}")))?;
        let rhs_off = lhs.len() + 1;
        let lhs = lhs.trim();
        if let Some(inner) = lhs.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| syntax(st, 0, "unterminated commutator"))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| syntax(st, 1, "commutator needs two generators"))?;
            let x = lookup(st, a, 1)?;
            let y = lookup(st, b, 2 + a.len())?;
            if x == y {
                return Err(syntax(st, 0, "commutator of a generator with itself"));
            }
            if !seen_pairs.insert((x.min(y), x.max(y))) {
                return Err(Error::Presentation(format!(
                    "duplicate commutator relation for {} and {}",
                    gens[x], gens[y]
                )));
            }
            let word = parse_word(st, rhs, rhs_off, &names)?;
            relations.push(Relation::Commutator { x, y, word });
        } else if let Some((g, k)) = lhs.split_once('^') {
            let gen = lookup(st, g, 0)?;
            let exp: u64 = k
                .trim()
                .parse()
                .map_err(|_| syntax(st, g.len() + 1, format!("bad exponent {:?}", k.trim())))?;
            if exp < p as u64 || log_p(exp, p as u64).is_none() {
                return Err(Error::Presentation(format!(
                    "power relation {}^{exp}: exponent must be a positive power of {p}",
                    gens[gen]
                )));
            }
            if has_power[gen] {
                return Err(Error::Presentation(format!(
                    "duplicate power relation for {}",
                    gens[gen]
                )));
            }
            has_power[gen] = true;
            rel_orders[gen] = exp;
            let word = parse_word(st, rhs, rhs_off, &names)?;
            relations.push(Relation::Power { gen, exp, word });
        } else {
            return Err(syntax(st, 0, format!("unrecognised relation {lhs:?}")));
        }
    }
    let pc_order = polycyclic_order(&gens, &relations)?;
    Ok(PcPresentation {
        prime: p,
        gens,
        relations,
        pc_order,
        rel_orders,
    })
}

fn polycyclic_order(gens: &[String], relations: &[Relation]) -> Result<Vec<usize>> {
    let n = gens.len();
    let mut before: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let wrong_side = |what: String| {
        Error::Presentation(format!(
            "relation on the wrong side of the index order: {what}"
        ))
    };
    for rel in relations {
        match rel {
            Relation::Power { gen, word, .. } => {
                for &(h, _) in word {
                    if h == *gen {
                        return Err(wrong_side(format!("{}^k uses {}", gens[h], gens[h])));
                    }
                    before[*gen][h] = true;
                }
            }
            Relation::Commutator { x, y, word } => {
                let in_w = |g: usize| word.iter().any(|&(h, _)| h == g);
                let (lo, hi) = match (in_w(*x), in_w(*y)) {
                    (true, true) => {
                        return Err(wrong_side(format!(
                            "[{},{}] uses both generators",
                            gens[*x], gens[*y]
                        )))
                    }
                    (false, true) => (*x, *y),
                    (true, false) => (*y, *x),
                    (false, false) => (*x.min(y), *x.max(y)),
                };
                before[lo][hi] = true;
                for &(h, _) in word {
                    before[lo][h] = true;
                }
            }
        }
    }
    let mut indeg: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| before[u][v]).count())
        .collect();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&v| !done[v] && indeg[v] == 0)
            .ok_or_else(|| wrong_side("the relations admit no polycyclic ordering".into()))?;
        done[next] = true;
        order.push(next);
        for v in 0..n {
            if before[next][v] {
                indeg[v] -= 1;
            }
        }
    }
    Ok(order)
}

impl PcPresentation {
    /// Π of relative orders.
    pub fn declared_order(&self) -> u64 {
        self.rel_orders.iter().product()
    }

    /// Canonical text form; `parse_pc(render())` reproduces the presentation.
    pub fn render(&self) -> String {
        let word = |w: &Word| -> String {
            if w.is_empty() {
                return "1".into();
            }
            w.iter()
                .map(|&(g, k)| {
                    if k == 1 {
                        self.gens[g].clone()
                    } else {
                        format!("{}^{k}", self.gens[g])
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let mut out = format!("p={}\ngens {}\n", self.prime, self.gens.join(","));
        for r in &self.relations {
            match r {
                Relation::Power { gen, exp, word: w } => {
                    out.push_str(&format!("{}^{exp}={}\n", self.gens[*gen], word(w)))
                }
                Relation::Commutator { x, y, word: w } => out.push_str(&format!(
                    "[{},{}]={}\n",
                    self.gens[*x],
                    self.gens[*y],
                    word(w)
                )),
            }
        }
        out
    }
}

/// Cyclic extension `⟨g, N⟩` with `g^r = w ∈ N` and `φ(x) = g⁻¹xg`.
///
/// Elements are flat indices `e·|N| + h`, meaning `g^e h`.
struct Layer {
    order: usize,
    n_order: usize,
    r: usize,
    w: u32,
    /// `phi_pows[k][h] = φ^k(h)`.
    phi_pows: Vec<Vec<u32>>,
    table: Option<Vec<u16>>,
}

struct Tower {
    /// `layers[i]` realizes the subgroup generated by pc generators `i..`.
    layers: Vec<Layer>,
}

impl Tower {
    fn mul_at(&self, level: usize, a: u32, b: u32) -> u32 {
        if level == self.layers.len() {
            return 0;
        }
        let l = &self.layers[level];
        if let Some(t) = &l.table {
            return t[a as usize * l.order + b as usize] as u32;
        }
        let nn = l.n_order as u32;
        let (e1, h1) = (a / nn, a % nn);
        let (e2, h2) = (b / nn, b % nn);
        let mut e = e1 + e2;
        let mut h = l.phi_pows[e2 as usize][h1 as usize];
        if e as usize >= l.r {
            e -= l.r as u32;
            h = self.mul_at(level + 1, l.w, h);
        }
        h = self.mul_at(level + 1, h, h2);
        e * nn + h
    }

    fn pow_at(&self, level: usize, x: u32, k: u64) -> u32 {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_at(level, acc, base);
            }
            base = self.mul_at(level, base, base);
            k >>= 1;
        }
        acc
    }

    fn order_at(&self, level: usize) -> usize {
        self.layers.get(level).map_or(1, |l| l.order)
    }

    fn inv_at(&self, level: usize, x: u32) -> u32 {
        self.pow_at(level, x, self.order_at(level) as u64 - 1)
    }
}

fn eval_flat(tower: &Tower, level: usize, word: &Word, gen_flat: &[u32]) -> u32 {
    let ord = tower.order_at(level) as i64;
    word.iter().fold(0, |acc, &(g, k)| {
        let x = tower.pow_at(level, gen_flat[g], k.rem_euclid(ord) as u64);
        tower.mul_at(level, acc, x)
    })
}

/// Realizes a presentation as a layered tower of cyclic extensions, checks
/// consistency, enumerates it, and checks every defining relation.
///
/// The first `gens.len()` generators of the result are the presentation's
/// generators in declaration order; the rest are their `p`-power refinements.
pub fn realize(pres: &PcPresentation, max_order: usize) -> Result<Group> {
    let declared = pres.declared_order();
    if declared > max_order as u64 {
        return Err(Error::Budget {
            what: "group order",
            limit: max_order,
            reached: declared.min(usize::MAX as u64) as usize,
            detail: " (declared order of presentation)".into(),
        });
    }
    let n = pres.gens.len();
    let mut pos = vec![0usize; n];
    for (i, &g) in pres.pc_order.iter().enumerate() {
        pos[g] = i;
    }
    // flat index of each declaration-indexed generator
    let mut gen_flat = vec![0u32; n];
    let mut size_below = 1usize;
    for &g in pres.pc_order.iter().rev() {
        gen_flat[g] = size_below as u32;
        size_below *= pres.rel_orders[g] as usize;
    }
    let mut power_word: Vec<Word> = vec![Vec::new(); n];
    // conj[g][h] = word for h^g, for pc-later h
    let mut conj: HashMap<(usize, usize), Word> = HashMap::new();
    for rel in &pres.relations {
        match rel {
            Relation::Power { gen, word, .. } => power_word[*gen] = word.clone(),
            Relation::Commutator { x, y, word } => {
                let (lo, hi) = if pos[*x] < pos[*y] {
                    (*x, *y)
                } else {
                    (*y, *x)
                };
                // h^lo = h·[h,lo] = h·[lo,h]⁻¹
                let mut w = vec![(hi, 1)];
                if *x == hi {
                    w.extend(word.iter().copied());
                } else {
                    w.extend(word.iter().rev().map(|&(g, k)| (g, -k)));
                }
                conj.insert((lo, hi), w);
            }
        }
    }
    let mut tower = Tower { layers: Vec::new() };
    for level in (0..n).rev() {
        let g = pres.pc_order[level];
        let sub = level + 1;
        // `tower.layers[0]` is the subgroup generated by pc generators `sub..`
        let n_order = tower.order_at(0);
        let r = pres.rel_orders[g] as usize;
        let later: Vec<usize> = pres.pc_order[sub..].to_vec();
        let w = eval_flat(&tower, 0, &power_word[g], &gen_flat);
        let images: Vec<u32> = later
            .iter()
            .map(|&h| match conj.get(&(g, h)) {
                Some(word) => eval_flat(&tower, 0, word, &gen_flat),
                None => gen_flat[h],
            })
            .collect();
        // φ(Π h_j^{e_j}) = Π φ(h_j)^{e_j}, with flat digits read high to low
        let mut phi = vec![0u32; n_order];
        for (x, slot) in phi.iter_mut().enumerate() {
            let mut rem = x as u32;
            let mut acc = 0u32;
            for (j, &h) in later.iter().enumerate() {
                let stride = gen_flat[h];
                let e = rem / stride;
                rem %= stride;
                if e > 0 {
                    acc = tower.mul_at(0, acc, tower.pow_at(0, images[j], e as u64));
                }
            }
            *slot = acc;
        }
        let name = &pres.gens[g];
        for x in 0..n_order as u32 {
            for &h in &later {
                let s = gen_flat[h];
                if phi[tower.mul_at(0, x, s) as usize]
                    != tower.mul_at(0, phi[x as usize], phi[s as usize])
                {
                    return Err(Error::Inconsistent(format!(
                        "conjugation by {name} is not a homomorphism"
                    )));
                }
            }
        }
        let mut hit = vec![false; n_order];
        for &y in &phi {
            hit[y as usize] = true;
        }
        if hit.iter().any(|&b| !b) {
            return Err(Error::Inconsistent(format!(
                "conjugation by {name} is not bijective"
            )));
        }
        if phi[w as usize] != w {
            return Err(Error::Inconsistent(format!(
                "{name} does not commute with its power {name}^{r}"
            )));
        }
        let mut phi_pows = vec![(0..n_order as u32).collect::<Vec<u32>>()];
        for k in 1..=r {
            let prev = &phi_pows[k - 1];
            phi_pows.push(prev.iter().map(|&x| phi[x as usize]).collect());
        }
        let w_inv = tower.inv_at(0, w);
        for x in 0..n_order as u32 {
            let expect = tower.mul_at(0, tower.mul_at(0, w_inv, x), w);
            if phi_pows[r][x as usize] != expect {
                return Err(Error::Inconsistent(format!(
                    "conjugation by {name}^{r} disagrees with conjugation by its power relation"
                )));
            }
        }
        phi_pows.truncate(r);
        let order = r * n_order;
        tower.layers.insert(
            0,
            Layer {
                order,
                n_order,
                r,
                w,
                phi_pows,
                table: None,
            },
        );
        if order <= DENSE_LIMIT && level > 0 {
            let mut t = vec![0u16; order * order];
            for a in 0..order as u32 {
                for b in 0..order as u32 {
                    t[a as usize * order + b as usize] = tower.mul_at(0, a, b) as u16;
                }
            }
            tower.layers[0].table = Some(t);
        }
    }
    debug_assert_eq!(tower.order_at(0) as u64, declared);
    let p = pres.prime as u64;
    let mut gens: Vec<u32> = gen_flat.clone();
    for g in 0..n {
        let mut k = p;
        while k < pres.rel_orders[g] {
            gens.push(tower.pow_at(0, gen_flat[g], k));
            k *= p;
        }
    }
    let group = Group::enumerate(0u32, &gens, |a, b| tower.mul_at(0, *a, *b), max_order)?;
    if group.order() as u64 != declared {
        return Err(Error::Inconsistent(format!(
            "enumerated order {} differs from declared order {declared}",
            group.order()
        )));
    }
    group.sanity_check(256)?;
    check_relations(pres, &group)?;
    Ok(group)
}

/// Evaluates a word on the generators of a realized presentation.
pub fn eval_word(group: &Group, word: &Word) -> Elem {
    word.iter().fold(0, |acc, &(g, k)| {
        group.mul(acc, group.pow(group.gens()[g], k))
    })
}

fn check_relations(pres: &PcPresentation, group: &Group) -> Result<()> {
    let gen = |i: usize| group.gens()[i];
    for rel in &pres.relations {
        let (lhs, w, what) = match rel {
            Relation::Power { gen: g, exp, word } => (
                group.pow(gen(*g), *exp as i64),
                word,
                format!("{}^{exp}", pres.gens[*g]),
            ),
            Relation::Commutator { x, y, word } => (
                group.commutator(gen(*x), gen(*y)),
                word,
                format!("[{},{}]", pres.gens[*x], pres.gens[*y]),
            ),
        };
        if lhs != eval_word(group, w) {
            return Err(Error::Inconsistent(format!("relation {what} fails")));
        }
    }
    // the relative orders are the true orders modulo later generators
    for (i, &g) in pres.pc_order.iter().enumerate() {
        let r = pres.rel_orders[g];
        let later = &pres.pc_order[i + 1..];
        let sub = group.subgroup_generated(&later.iter().map(|&h| gen(h)).collect::<Vec<_>>());
        if !sub.contains(group.pow(gen(g), r as i64)) {
            return Err(Error::Inconsistent(format!(
                "{}^{r} escapes the later generators",
                pres.gens[g]
            )));
        }
    }
    Ok(())
}

impl PermSpec {
    pub fn validate(&self) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::Permutation("no generators".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.degree {
                return Err(Error::Permutation(format!(
                    "generator {i} has {} images, expected {}",
                    g.len(),
                    self.degree
                )));
            }
            let mut seen = vec![false; self.degree];
            for &x in g {
                if x as usize >= self.degree || std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Permutation(format!(
                        "generator {i} is not a bijection of 0..{}",
                        self.degree
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn parse_perm(text: &str) -> Result<PermSpec> {
    let mut stmts = statements(text);
    let head = stmts
        .next()
        .ok_or_else(|| Error::Permutation("empty input".into()))?;
    let degree: usize = head
        .text
        .strip_prefix("perm")
        .map(str::trim)
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| syntax(&head, 0, "expected `perm <degree>`"))?;
    let mut generators = Vec::new();
    for st in stmts {
        let t = st.text;
        let img = if let Some(list) = t.strip_prefix('[') {
            let list = list
                .strip_suffix(']')
                .ok_or_else(|| syntax(&st, 0, "unterminated image list"))?;
            list.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| syntax(&st, 0, format!("bad point {:?}", x.trim())))
                })
                .collect::<Result<Vec<u32>>>()?
        } else if t.starts_with('(') {
            let mut img: Vec<u32> = (0..degree as u32).collect();
            for cyc in t.split(')').map(str::trim).filter(|c| !c.is_empty()) {
                let body = cyc
                    .strip_prefix('(')
                    .ok_or_else(|| syntax(&st, 0, format!("malformed cycle {cyc:?}")))?;
                let pts = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|x| {
                        x.parse::<u32>()
                            .map_err(|_| syntax(&st, 0, format!("bad point {x:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()?;
                for (i, &a) in pts.iter().enumerate() {
                    if a as usize >= degree {
                        return Err(Error::Permutation(format!(
                            "point {a} out of range for degree {degree}"
                        )));
                    }
                    img[a as usize] = pts[(i + 1) % pts.len()];
                }
            }
            img
        } else {
            return Err(syntax(
                &st,
                0,
                format!("expected a cycle or image list, got {t:?}"),
            ));
        };
        generators.push(img);
    }
    let spec = PermSpec { degree, generators };
    spec.validate()?;
    Ok(spec)
}

pub fn realize_perm(spec: &PermSpec, max_order: usize) -> Result<Group> {
    spec.validate()?;
    let id: Vec<u32> = (0..spec.degree as u32).collect();
    let g = Group::enumerate(
        id,
        &spec.generators,
        |a: &Vec<u32>, b: &Vec<u32>| a.iter().map(|&i| b[i as usize]).collect(),
        max_order,
    )?;
    g.sanity_check(256)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_ORDER;

    fn build(text: &str) -> Result<Group> {
        parse_group(text)?.realize(DEFAULT_MAX_ORDER)
    }

    #[test]
    fn heisenberg() {
        let g = build("p=3; gens a,b,c; a^3=1; b^3=1; c^3=1; [b,a]=c; [c,a]=1; [c,b]=1").unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.center().order(), 3);
    }

    #[test]
    fn modular_27_reorders_generators() {
        let pres = parse_pc("p=3; gens a,b; a^9=1; b^3=1; [a,b]=a^3").unwrap();
        assert_eq!(pres.pc_order, vec![1, 0]);
        let g = realize(&pres, 1000).unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 9);
        assert_eq!(g.center().order(), 3);
    }

    #[test]
    fn unknown_generator_is_named() {
        let err = parse_pc("p=3; gens a,b; [a,b]=q").unwrap_err();
        match err {
            Error::Syntax { msg, line, col } => {
                assert!(msg.contains("\"q\""), "{msg}");
                assert_eq!(line, 1);
                assert_eq!(col, 22);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn inconsistent_action_is_rejected() {
        let err = build("p=3; gens a,b; [b,a]=b").unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)), "{err:?}");
    }

    #[test]
    fn inconsistent_power_is_rejected() {
        // a^3 = b with b not central in <a,b,c>
        let err = build("p=3; gens a,b,c; a^3=b; [b,a]=c").unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)), "{err:?}");
    }

    #[test]
    fn cyclic_ordering_is_rejected() {
        let err = parse_pc("p=3; gens a,b; a^3=b; b^3=a").unwrap_err();
        assert!(matches!(err, Error::Presentation(_)), "{err:?}");
    }

    #[test]
    fn json_and_text_agree() {
        let j = r#"{"type":"pc","prime":3,"gens":["a","b"],"powers":{"a^9":"1"},"commutators":{"[a,b]":"a^3"}}"#;
        let g = build(j).unwrap();
        assert_eq!(g.order(), 27);
        let perm = r#"{"type":"perm","degree":3,"generators":[[1,2,0]]}"#;
        assert_eq!(build(perm).unwrap().order(), 3);
    }

    #[test]
    fn permutation_inputs() {
        assert_eq!(build("perm 3\n(0 1 2)").unwrap().order(), 3);
        let g = build("perm 6; (0 1 2); (3 4 5)").unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.exponent(), 3);
        let g = build("perm 9\n(0 1 2 3 4 5 6 7 8)").unwrap();
        assert_eq!((g.order(), g.exponent()), (9, 9));
        let err = build("perm 3\n[0,0,1]").unwrap_err();
        assert!(matches!(err, Error::Permutation(_)));
    }

    #[test]
    fn render_round_trip() {
        let src = "p=3; gens z,y,x; z^3=1; y^3=1; x^9=1; [x,z]=y; [x,y]=x^3";
        let pres = parse_pc(src).unwrap();
        let again = parse_pc(&pres.render()).unwrap();
        assert_eq!(pres, again);
        assert_eq!(realize(&again, 1000).unwrap().order(), 81);
    }
}
