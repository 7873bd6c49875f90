//! Finite positive-cone consistency search over a Cayley ball.
//!
//! A left order on a group restricts to a sign assignment on any ball that
//! satisfies: inverse pairs get opposite signs, and the product of two
//! positives is a positive (in particular never the identity). A bi-order
//! additionally gives conjugation-invariant signs. If no assignment
//! satisfies the ball's constraints, compactness shows the whole group
//! admits no such order, so an exhaustive search that fails is a sound
//! *non*-orderability proof. The search emits a replayable certificate
//! either way; a consistent assignment is explicitly inconclusive for the
//! full group.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::oracle::EqualityOracle;
use crate::words::{Word, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConeError {
    #[error("generators {given:?} do not match the oracle alphabet {expected:?}")]
    GeneratorMismatch { given: Vec<String>, expected: Vec<String> },
    #[error("radius must be at least 1")]
    RadiusTooSmall,
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone)]
pub struct BallElement {
    pub key: String,
    /// A geodesic witness word.
    pub word: Word,
    pub length: u32,
}

/// A radius-`r` ball: distinct group elements represented by words of length
/// at most `r`, the inversion map, and every product with a length witness
/// `|g| + |h| <= r`.
pub struct GroupBall {
    oracle: EqualityOracle,
    radius: u32,
    elements: Vec<BallElement>,
    index: HashMap<String, usize>,
    inverse: Vec<usize>,
    /// `(i, j) -> k`, iterated in deterministic order.
    products: Vec<((usize, usize), usize)>,
}

impl GroupBall {
    pub fn oracle(&self) -> &EqualityOracle {
        &self.oracle
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn elements(&self) -> &[BallElement] {
        &self.elements
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn products(&self) -> &[((usize, usize), usize)] {
        &self.products
    }

    pub fn lookup(&self, w: &Word) -> Result<Option<usize>, WordError> {
        Ok(self.index.get(&self.oracle.canonical_key(w)?).copied())
    }

    /// First non-identity element equal to its own inverse, if any.
    pub fn self_inverse_torsion(&self) -> Option<usize> {
        (1..self.elements.len()).find(|&i| self.inverse[i] == i)
    }
}

/// Breadth-first enumeration of the ball, deduplicating by canonical form.
pub fn build_ball(
    oracle: &EqualityOracle,
    generators: &[String],
    radius: u32,
) -> Result<GroupBall, ConeError> {
    let expected = oracle.generators();
    if generators != expected.as_slice() {
        return Err(ConeError::GeneratorMismatch {
            given: generators.to_vec(),
            expected,
        });
    }
    if radius < 1 {
        return Err(ConeError::RadiusTooSmall);
    }

    let letters: Vec<Word> = expected
        .iter()
        .flat_map(|g| [Word::generator(g, 1), Word::generator(g, -1)])
        .collect();

    let mut elements: Vec<BallElement> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let identity = Word::identity();
    let id_key = oracle.canonical_key(&identity)?;
    index.insert(id_key.clone(), 0);
    elements.push(BallElement { key: id_key, word: identity, length: 0 });

    let mut frontier: Vec<usize> = vec![0];
    for depth in 1..=radius {
        let mut next = Vec::new();
        for &parent in &frontier {
            let base = elements[parent].word.clone();
            for letter in &letters {
                let word = base.mul(letter);
                let key = oracle.canonical_key(&word)?;
                if index.contains_key(&key) {
                    continue;
                }
                let idx = elements.len();
                index.insert(key.clone(), idx);
                elements.push(BallElement { key, word, length: depth });
                next.push(idx);
            }
        }
        frontier = next;
    }

    let mut inverse = Vec::with_capacity(elements.len());
    for el in &elements {
        let key = oracle.canonical_key(&el.word.inverse())?;
        let idx = *index
            .get(&key)
            .expect("inverse of a ball element stays in the ball");
        inverse.push(idx);
    }

    let mut products = Vec::new();
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            if elements[i].length + elements[j].length > radius {
                continue;
            }
            let word = elements[i].word.mul(&elements[j].word);
            let key = oracle.canonical_key(&word)?;
            let k = *index
                .get(&key)
                .expect("products with length witnesses stay in the ball");
            products.push(((i, j), k));
        }
    }

    Ok(GroupBall { oracle: oracle.clone(), radius, elements, index, inverse, products })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    LeftOrder,
    BiOrder,
}

/// A ball fact cited by a certificate step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Table entry `left * right = k`: positives multiply to a positive and
    /// never to the identity.
    Product { left: usize, right: usize },
    /// Oracle fact `conjugator * element * conjugator^-1 = k`: in a bi-order
    /// conjugate elements share a sign.
    Conjugation { conjugator: usize, element: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStep {
    /// A non-identity element equal to its own inverse.
    Torsion { element: usize },
    Decide { pair: usize, positive: bool },
    Propagate { pair: usize, positive: bool, by: Constraint },
    /// The cited constraint is violated; replay flips the innermost open
    /// decision, or ends the refutation when none remains.
    Conflict { by: Constraint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeCertificate {
    /// A sign assignment satisfying every ball constraint. Inconclusive for
    /// the group: a finite consistent cone certifies no full order.
    Consistent {
        radius: u32,
        /// `(representative element, sign)` per inverse pair.
        signs: Vec<(usize, bool)>,
    },
    /// No assignment exists; by compactness the group admits no left order
    /// (no bi-order in `BiOrder` mode).
    Refutation { radius: u32, trace: Vec<TraceStep> },
}

impl ConeCertificate {
    pub fn is_refutation(&self) -> bool {
        matches!(self, ConeCertificate::Refutation { .. })
    }

    pub fn radius(&self) -> u32 {
        match self {
            ConeCertificate::Consistent { radius, .. } => *radius,
            ConeCertificate::Refutation { radius, .. } => *radius,
        }
    }

    /// Serializes one line per sign or trace step.
    pub fn render(&self, ball: &GroupBall) -> String {
        let name = |i: usize| {
            let w = &ball.elements()[i].word;
            if w.is_identity() { "1".to_string() } else { w.render() }
        };
        let cname = |c: &Constraint| match c {
            Constraint::Product { left, right } => {
                format!("product({},{})", name(*left), name(*right))
            }
            Constraint::Conjugation { conjugator, element } => {
                format!("conjugation({},{})", name(*conjugator), name(*element))
            }
        };
        let mut out = String::new();
        match self {
            ConeCertificate::Consistent { signs, .. } => {
                for (rep, positive) in signs {
                    out.push_str(&format!(
                        "sign: {} {}\n",
                        name(*rep),
                        if *positive { "+" } else { "-" }
                    ));
                }
            }
            ConeCertificate::Refutation { trace, .. } => {
                for step in trace {
                    match step {
                        TraceStep::Torsion { element } => {
                            out.push_str(&format!(
                                "step: torsion {} equals its inverse\n",
                                name(*element)
                            ));
                        }
                        TraceStep::Decide { pair, positive } => {
                            out.push_str(&format!(
                                "step: decide {} {}\n",
                                name(*pair),
                                if *positive { "+" } else { "-" }
                            ));
                        }
                        TraceStep::Propagate { pair, positive, by } => {
                            out.push_str(&format!(
                                "step: propagate {} {} by {}\n",
                                name(*pair),
                                if *positive { "+" } else { "-" },
                                cname(by)
                            ));
                        }
                        TraceStep::Conflict { by } => {
                            out.push_str(&format!("step: conflict by {}\n", cname(by)));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::LeftOrder => write!(f, "left"),
            Mode::BiOrder => write!(f, "bi"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lit {
    var: usize,
    positive: bool,
}

#[derive(Debug, Clone)]
struct Clause {
    lits: Vec<Lit>,
    origin: Constraint,
}

/// Sign variables (one per inverse pair) and the clause database.
struct ConeProblem {
    /// Representative element per variable, sorted by (length, word).
    reps: Vec<usize>,
    /// element -> (variable, element is the representative)
    lit_of: Vec<Option<(usize, bool)>>,
    clauses: Vec<Clause>,
}

enum BuildOutcome {
    Torsion(usize),
    Problem(ConeProblem),
}

fn build_problem(ball: &GroupBall, mode: Mode) -> Result<BuildOutcome, WordError> {
    if let Some(e) = ball.self_inverse_torsion() {
        return Ok(BuildOutcome::Torsion(e));
    }
    let n = ball.elements().len();
    let mut reps: Vec<usize> = Vec::new();
    for i in 1..n {
        if i <= ball.inverse_of(i) {
            reps.push(i);
        }
    }
    reps.sort_by(|&a, &b| {
        let ka = (ball.elements()[a].length, ball.elements()[a].word.render());
        let kb = (ball.elements()[b].length, ball.elements()[b].word.render());
        ka.cmp(&kb)
    });
    let mut lit_of: Vec<Option<(usize, bool)>> = vec![None; n];
    for (v, &rep) in reps.iter().enumerate() {
        lit_of[rep] = Some((v, true));
        lit_of[ball.inverse_of(rep)] = Some((v, false));
    }

    let mut clauses = Vec::new();
    let mut push_clause = |raw: Vec<Lit>, origin: Constraint| {
        let mut lits: Vec<Lit> = Vec::new();
        for l in raw {
            if lits.iter().any(|o| o.var == l.var && o.positive != l.positive) {
                return; // tautology
            }
            if !lits.contains(&l) {
                lits.push(l);
            }
        }
        clauses.push(Clause { lits, origin });
    };

    let pos = |lit_of: &Vec<Option<(usize, bool)>>, e: usize| {
        let (var, is_rep) = lit_of[e].expect("non-identity element has a variable");
        Lit { var, positive: is_rep }
    };
    let neg = |lit_of: &Vec<Option<(usize, bool)>>, e: usize| {
        let (var, is_rep) = lit_of[e].expect("non-identity element has a variable");
        Lit { var, positive: !is_rep }
    };

    for &((i, j), k) in ball.products() {
        if i == 0 || j == 0 {
            continue;
        }
        let origin = Constraint::Product { left: i, right: j };
        if k == 0 {
            push_clause(vec![neg(&lit_of, i), neg(&lit_of, j)], origin);
        } else {
            push_clause(vec![neg(&lit_of, i), neg(&lit_of, j), pos(&lit_of, k)], origin);
        }
    }

    if mode == Mode::BiOrder {
        for h in 1..n {
            for g in 1..n {
                if 2 * ball.elements()[h].length + ball.elements()[g].length > ball.radius() {
                    continue;
                }
                let word = ball.elements()[h]
                    .word
                    .mul(&ball.elements()[g].word)
                    .mul(&ball.elements()[h].word.inverse());
                let k = ball
                    .lookup(&word)?
                    .expect("conjugate inside the length bound stays in the ball");
                if k == g {
                    continue;
                }
                let origin = Constraint::Conjugation { conjugator: h, element: g };
                push_clause(vec![neg(&lit_of, g), pos(&lit_of, k)], origin);
                push_clause(vec![pos(&lit_of, g), neg(&lit_of, k)], origin);
            }
        }
    }

    Ok(BuildOutcome::Problem(ConeProblem { reps, lit_of, clauses }))
}

struct Solver<'a> {
    problem: &'a ConeProblem,
    /// clause indices containing each literal, keyed by var*2 + positive
    occ: Vec<Vec<usize>>,
    assign: Vec<Option<bool>>,
    /// (var, value, is_decision)
    trail: Vec<(usize, bool, bool)>,
    pending: VecDeque<usize>,
    trace: Vec<TraceStep>,
}

impl<'a> Solver<'a> {
    fn new(problem: &'a ConeProblem) -> Self {
        let nv = problem.reps.len();
        let mut occ = vec![Vec::new(); nv * 2];
        for (ci, clause) in problem.clauses.iter().enumerate() {
            for lit in &clause.lits {
                occ[lit.var * 2 + lit.positive as usize].push(ci);
            }
        }
        Solver {
            problem,
            occ,
            assign: vec![None; nv],
            trail: Vec::new(),
            pending: VecDeque::new(),
            trace: Vec::new(),
        }
    }

    fn value(&self, lit: Lit) -> Option<bool> {
        self.assign[lit.var].map(|v| v == lit.positive)
    }

    fn assign_lit(&mut self, var: usize, value: bool, is_decision: bool) {
        self.assign[var] = Some(value);
        self.trail.push((var, value, is_decision));
        self.pending.push_back(var);
    }

    /// Processes pending assignments; returns a violated clause on conflict.
    fn propagate(&mut self) -> Option<usize> {
        while let Some(var) = self.pending.pop_front() {
            let value = self.assign[var].expect("queued vars are assigned");
            // visit clauses containing the now-false literal
            let false_lit_key = var * 2 + (!value) as usize;
            for idx in 0..self.occ[false_lit_key].len() {
                let ci = self.occ[false_lit_key][idx];
                let clause = &self.problem.clauses[ci];
                let mut unassigned: Option<Lit> = None;
                let mut satisfied = false;
                let mut open = 0;
                for &lit in &clause.lits {
                    match self.value(lit) {
                        Some(true) => {
                            satisfied = true;
                            break;
                        }
                        Some(false) => {}
                        None => {
                            open += 1;
                            unassigned = Some(lit);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match open {
                    0 => {
                        self.pending.clear();
                        return Some(ci);
                    }
                    1 => {
                        let lit = unassigned.unwrap();
                        self.trace.push(TraceStep::Propagate {
                            pair: self.problem.reps[lit.var],
                            positive: lit.positive,
                            by: clause.origin,
                        });
                        self.assign_lit(lit.var, lit.positive, false);
                    }
                    _ => {}
                }
            }
        }
        None
    }

    /// Initial pass: size-one clauses are units, empty clauses conflicts.
    fn seed_units(&mut self) -> Option<usize> {
        for (ci, clause) in self.problem.clauses.iter().enumerate() {
            if clause.lits.is_empty() {
                return Some(ci);
            }
            if clause.lits.len() == 1 {
                let lit = clause.lits[0];
                match self.value(lit) {
                    Some(true) => {}
                    Some(false) => return Some(ci),
                    None => {
                        self.trace.push(TraceStep::Propagate {
                            pair: self.problem.reps[lit.var],
                            positive: lit.positive,
                            by: clause.origin,
                        });
                        self.assign_lit(lit.var, lit.positive, false);
                    }
                }
            }
        }
        None
    }

    /// Returns the satisfying assignment, or `None` after an exhaustive
    /// refutation (the trace then replays to a contradiction).
    fn solve(&mut self) -> Option<Vec<bool>> {
        let mut conflict = self.seed_units();
        loop {
            if conflict.is_none() {
                conflict = self.propagate();
            }
            if let Some(ci) = conflict.take() {
                self.trace.push(TraceStep::Conflict {
                    by: self.problem.clauses[ci].origin,
                });
                // chronological backtracking: flip the innermost decision
                loop {
                    match self.trail.pop() {
                        None => return None,
                        Some((var, value, is_decision)) => {
                            self.assign[var] = None;
                            if is_decision {
                                self.assign_lit(var, !value, false);
                                break;
                            }
                        }
                    }
                }
                continue;
            }
            // branch on the first unassigned variable, positive first
            match (0..self.problem.reps.len()).find(|&v| self.assign[v].is_none()) {
                None => {
                    return Some(
                        self.assign.iter().map(|v| v.expect("all assigned")).collect(),
                    );
                }
                Some(v) => {
                    self.trace.push(TraceStep::Decide {
                        pair: self.problem.reps[v],
                        positive: true,
                    });
                    self.assign_lit(v, true, true);
                }
            }
        }
    }
}

/// Backtracking search with unit propagation over the ball's sign variables.
pub fn search_cone(ball: &GroupBall, mode: Mode) -> Result<ConeCertificate, ConeError> {
    match build_problem(ball, mode)? {
        BuildOutcome::Torsion(e) => Ok(ConeCertificate::Refutation {
            radius: ball.radius(),
            trace: vec![TraceStep::Torsion { element: e }],
        }),
        BuildOutcome::Problem(problem) => {
            let mut solver = Solver::new(&problem);
            match solver.solve() {
                Some(assign) => Ok(ConeCertificate::Consistent {
                    radius: ball.radius(),
                    signs: problem
                        .reps
                        .iter()
                        .zip(assign)
                        .map(|(&rep, v)| (rep, v))
                        .collect(),
                }),
                None => Ok(ConeCertificate::Refutation {
                    radius: ball.radius(),
                    trace: solver.trace,
                }),
            }
        }
    }
}

/// Replays a certificate against the ball, independent of solver internals.
pub fn verify_certificate(ball: &GroupBall, cert: &ConeCertificate, mode: Mode) -> bool {
    match cert {
        ConeCertificate::Consistent { radius, signs } => {
            if *radius != ball.radius() {
                return false;
            }
            let problem = match build_problem(ball, mode) {
                Ok(BuildOutcome::Problem(p)) => p,
                _ => return false,
            };
            if signs.len() != problem.reps.len() {
                return false;
            }
            let mut assign = vec![None; problem.reps.len()];
            for &(rep, value) in signs {
                let Some(&Some((var, is_rep))) = problem.lit_of.get(rep) else {
                    return false;
                };
                if !is_rep {
                    return false;
                }
                assign[var] = Some(value);
            }
            if assign.iter().any(|v| v.is_none()) {
                return false;
            }
            problem.clauses.iter().all(|clause| {
                clause
                    .lits
                    .iter()
                    .any(|lit| assign[lit.var] == Some(lit.positive))
            })
        }
        ConeCertificate::Refutation { radius, trace } => {
            if *radius != ball.radius() {
                return false;
            }
            verify_refutation(ball, trace, mode)
        }
    }
}

fn verify_refutation(ball: &GroupBall, trace: &[TraceStep], mode: Mode) -> bool {
    if let [TraceStep::Torsion { element }] = trace {
        let e = *element;
        return e != 0 && e < ball.elements().len() && ball.inverse_of(e) == e;
    }
    let problem = match build_problem(ball, mode) {
        Ok(BuildOutcome::Problem(p)) => p,
        _ => return false,
    };
    let mut by_origin: HashMap<Constraint, Vec<usize>> = HashMap::new();
    for (ci, clause) in problem.clauses.iter().enumerate() {
        by_origin.entry(clause.origin).or_default().push(ci);
    }
    let var_of = |pair: usize| -> Option<usize> {
        match problem.lit_of.get(pair) {
            Some(&Some((var, true))) => Some(var),
            _ => None,
        }
    };

    let mut assign: Vec<Option<bool>> = vec![None; problem.reps.len()];
    let mut trail: Vec<(usize, bool, bool)> = Vec::new();
    let mut refuted = false;

    for step in trace {
        if refuted {
            return false; // steps after the closing conflict
        }
        match step {
            TraceStep::Torsion { .. } => return false,
            TraceStep::Decide { pair, positive } => {
                let Some(var) = var_of(*pair) else { return false };
                if assign[var].is_some() {
                    return false;
                }
                assign[var] = Some(*positive);
                trail.push((var, *positive, true));
            }
            TraceStep::Propagate { pair, positive, by } => {
                let Some(var) = var_of(*pair) else { return false };
                if assign[var].is_some() {
                    return false;
                }
                let Some(clause_ids) = by_origin.get(by) else { return false };
                let forced = clause_ids.iter().any(|&ci| {
                    let clause = &problem.clauses[ci];
                    let mut target_present = false;
                    let mut rest_false = true;
                    for lit in &clause.lits {
                        if lit.var == var {
                            if lit.positive == *positive {
                                target_present = true;
                            } else {
                                rest_false = false;
                            }
                        } else {
                            match assign[lit.var] {
                                Some(v) if v != lit.positive => {}
                                _ => rest_false = false,
                            }
                        }
                    }
                    target_present && rest_false
                });
                if !forced {
                    return false;
                }
                assign[var] = Some(*positive);
                trail.push((var, *positive, false));
            }
            TraceStep::Conflict { by } => {
                let Some(clause_ids) = by_origin.get(by) else { return false };
                let violated = clause_ids.iter().any(|&ci| {
                    problem.clauses[ci]
                        .lits
                        .iter()
                        .all(|lit| assign[lit.var] == Some(!lit.positive))
                });
                if !violated {
                    return false;
                }
                loop {
                    match trail.pop() {
                        None => {
                            refuted = true;
                            break;
                        }
                        Some((var, value, is_decision)) => {
                            assign[var] = None;
                            if is_decision {
                                assign[var] = Some(!value);
                                trail.push((var, !value, false));
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    refuted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ball(oracle: EqualityOracle, radius: u32) -> GroupBall {
        let gens = oracle.generators();
        build_ball(&oracle, &gens, radius).unwrap()
    }

    #[test]
    fn ball_counts() {
        let b = ball(EqualityOracle::Free { rank: 2 }, 2);
        assert_eq!(b.elements().len(), 17); // 1 + 4 + 12

        let b = ball(EqualityOracle::FreeAbelian { rank: 1 }, 3);
        assert_eq!(b.elements().len(), 7); // {-3..3}

        let b = ball(EqualityOracle::KleinBottle, 2);
        assert_eq!(b.elements().len(), 13); // |a| + |b| <= 2 diamond
    }

    #[test]
    fn generator_mismatch_is_an_error() {
        let oracle = EqualityOracle::KleinBottle;
        let err = build_ball(&oracle, &["x".to_string()], 2);
        assert!(matches!(err, Err(ConeError::GeneratorMismatch { .. })));
    }

    #[test]
    fn z2_torsion_refuted() {
        let b = ball(EqualityOracle::Cyclic { modulus: 2 }, 2);
        let cert = search_cone(&b, Mode::LeftOrder).unwrap();
        assert!(cert.is_refutation());
        if let ConeCertificate::Refutation { trace, .. } = &cert {
            assert!(matches!(trace[0], TraceStep::Torsion { .. }));
        }
        assert!(verify_certificate(&b, &cert, Mode::LeftOrder));
    }

    #[test]
    fn odd_torsion_refuted_by_propagation() {
        let b = ball(EqualityOracle::Cyclic { modulus: 3 }, 3);
        let cert = search_cone(&b, Mode::LeftOrder).unwrap();
        assert!(cert.is_refutation());
        assert!(verify_certificate(&b, &cert, Mode::LeftOrder));
    }

    #[test]
    fn klein_biorder_refuted_at_radius_3() {
        let b = ball(EqualityOracle::KleinBottle, 3);
        let cert = search_cone(&b, Mode::BiOrder).unwrap();
        assert!(cert.is_refutation());
        assert!(verify_certificate(&b, &cert, Mode::BiOrder));
        // the trace replays the conjugation l*m*l^-1 = m^-1
        if let ConeCertificate::Refutation { trace, .. } = &cert {
            assert!(trace.iter().any(|s| matches!(
                s,
                TraceStep::Propagate { by: Constraint::Conjugation { .. }, .. }
                    | TraceStep::Conflict { by: Constraint::Conjugation { .. } }
            )));
        }
    }

    #[test]
    fn klein_left_order_is_consistent() {
        for radius in 3..=6 {
            let b = ball(EqualityOracle::KleinBottle, radius);
            let cert = search_cone(&b, Mode::LeftOrder).unwrap();
            assert!(!cert.is_refutation(), "radius {radius}");
            assert!(verify_certificate(&b, &cert, Mode::LeftOrder));
        }
    }

    #[test]
    fn free_group_is_consistent() {
        let b = ball(EqualityOracle::Free { rank: 2 }, 3);
        let cert = search_cone(&b, Mode::LeftOrder).unwrap();
        assert!(!cert.is_refutation());
        assert!(verify_certificate(&b, &cert, Mode::LeftOrder));
        let cert = search_cone(&b, Mode::BiOrder).unwrap();
        assert!(!cert.is_refutation());
        assert!(verify_certificate(&b, &cert, Mode::BiOrder));
    }

    #[test]
    fn tampered_certificates_fail() {
        let b = ball(EqualityOracle::KleinBottle, 3);
        let cert = search_cone(&b, Mode::LeftOrder).unwrap();
        if let ConeCertificate::Consistent { radius, signs } = cert {
            let mut bad = signs.clone();
            bad[0].1 = !bad[0].1;
            let tampered = ConeCertificate::Consistent { radius, signs: bad };
            assert!(!verify_certificate(&b, &tampered, Mode::LeftOrder));
        } else {
            panic!("expected consistent cone");
        }

        // a refutation citing an absent table entry
        let fake = ConeCertificate::Refutation {
            radius: 3,
            trace: vec![TraceStep::Conflict {
                by: Constraint::Product { left: 9999, right: 9999 },
            }],
        };
        assert!(!verify_certificate(&b, &fake, Mode::LeftOrder));
    }

    #[test]
    fn determinism() {
        let b1 = ball(EqualityOracle::KleinBottle, 4);
        let b2 = ball(EqualityOracle::KleinBottle, 4);
        let c1 = search_cone(&b1, Mode::LeftOrder).unwrap();
        let c2 = search_cone(&b2, Mode::LeftOrder).unwrap();
        assert_eq!(c1, c2);
    }
}
