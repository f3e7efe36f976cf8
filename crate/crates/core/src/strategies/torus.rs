use serde::Serialize;

use super::{CopStrategy, TurnContext};
use crate::error::{Error, Result};
use crate::game::{Board, SafeSetForm};
use crate::graph::{make_torus, ProductLabels};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Script {
    C5c5,
    C5c3,
    OddEven,
    EvenEven,
    C2pC6,
}

/// Two-cop scripted strategy on `C_m □ C_n` with the grid labeling
/// `v_{i,j} = j·m + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusScript {
    pub script: Script,
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

pub fn strategy_c5c5() -> TorusScript {
    TorusScript { script: Script::C5c5, m: 5, n: 5, p: 2, q: 2 }
}

pub fn strategy_c5c3() -> TorusScript {
    TorusScript { script: Script::C5c3, m: 5, n: 3, p: 2, q: 1 }
}

/// `C_{2p+1} □ C_{2q}`, `p >= 1`, `q ∈ {2, 3}`.
pub fn strategy_odd_even(p: usize, q: usize) -> Result<TorusScript> {
    if p < 1 || !(2..=3).contains(&q) {
        return Err(Error::InvalidParameter(format!("odd_even needs p >= 1 and q in {{2,3}}, got p={p}, q={q}")));
    }
    Ok(TorusScript { script: Script::OddEven, m: 2 * p + 1, n: 2 * q, p, q })
}

/// `C_{2p} □ C_{2q}`, `p >= q >= 4`.
pub fn strategy_even_even(p: usize, q: usize) -> Result<TorusScript> {
    if q < 4 || p < q {
        return Err(Error::InvalidParameter(format!("even_even needs p >= q >= 4, got p={p}, q={q}")));
    }
    Ok(TorusScript { script: Script::EvenEven, m: 2 * p, n: 2 * q, p, q })
}

/// `C_{2p} □ C_6`, `p >= 3`.
pub fn strategy_c2p_c6(p: usize) -> Result<TorusScript> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("c2p_c6 needs p >= 3, got p={p}")));
    }
    Ok(TorusScript { script: Script::C2pC6, m: 2 * p, n: 6, p, q: 3 })
}

/// A scripted two-cop strategy for `C_m □ C_n`, if one applies. The strategy
/// may be written for `C_n □ C_m`; compare its `m`, `n` with the request.
pub fn scripted_for_torus(m: usize, n: usize) -> Option<TorusScript> {
    let direct = |m: usize, n: usize| -> Option<TorusScript> {
        match (m, n) {
            (5, 5) => Some(strategy_c5c5()),
            (5, 3) => Some(strategy_c5c3()),
            (m, 4 | 6) if m % 2 == 1 && m >= 3 => strategy_odd_even((m - 1) / 2, n / 2).ok(),
            (m, 6) if m % 2 == 0 && m >= 6 => strategy_c2p_c6(m / 2).ok(),
            (m, n) if m % 2 == 0 && n % 2 == 0 && m >= n && n >= 8 => {
                strategy_even_even(m / 2, n / 2).ok()
            }
            _ => None,
        }
    };
    direct(m, n).or_else(|| direct(n, m))
}

/// Offset of a two-vertex class: `Some((x, y))` when the class is
/// `{v_{x,y}, v_{x+di,y+dj}}`, trying the lower id as `v_{x,y}` first.
fn match_offset(labels: ProductLabels, class: VertexSet, di: isize, dj: isize) -> Option<(isize, isize)> {
    if class.len() != 2 {
        return None;
    }
    let members = class.to_vec();
    for (u, w) in [(members[0], members[1]), (members[1], members[0])] {
        let (x, y) = labels.coords(u);
        let (x, y) = (x as isize, y as isize);
        if labels.id(x + di, y + dj) == w {
            return Some((x, y));
        }
    }
    None
}

impl TorusScript {
    fn labels(&self) -> ProductLabels {
        ProductLabels { columns: self.m, rows: self.n }
    }

    fn v(&self, i: isize, j: isize) -> usize {
        self.labels().id(i, j)
    }

    fn first_probe(&self) -> Vec<usize> {
        let (p, q) = (self.p as isize, self.q as isize);
        match self.script {
            Script::C5c5 => vec![self.v(2, 4), self.v(2, 2)],
            Script::C5c3 => vec![self.v(2, 1), self.v(2, 2)],
            Script::OddEven | Script::EvenEven | Script::C2pC6 => {
                vec![self.v(p, 2 * q - 1), self.v(p, q - 1)]
            }
        }
    }

    fn fit(&self, ctx: &TurnContext<'_>, class: VertexSet) -> Result<SafeSetForm> {
        SafeSetForm::fit(self.labels(), class)
            .ok_or_else(|| ctx.unexpected(format!("class {:?} is not a rectangle", self.named(class))))
    }

    /// `B_2 = {v_{a+p,b+q}, v_{a+p,b}}`, the first probe translated onto the
    /// robber set.
    fn translated(&self, form: SafeSetForm) -> Vec<usize> {
        let (a, b) = (form.a as isize, form.b as isize);
        let (p, q) = (self.p as isize, self.q as isize);
        vec![self.v(a + p, b + q), self.v(a + p, b)]
    }

    fn named(&self, class: VertexSet) -> Vec<(usize, usize)> {
        class.iter().map(|v| self.labels().coords(v)).collect()
    }

    fn mirror_pair_c5(&self, ctx: &TurnContext<'_>, class: VertexSet) -> Result<Vec<usize>> {
        let members = class.to_vec();
        let ok = members.len() == 2 && {
            let ((i1, j1), (i2, j2)) = (self.labels().coords(members[0]), self.labels().coords(members[1]));
            j1 == j2 && (i1 + i2) % 5 == 4
        };
        if !ok {
            return Err(ctx.unexpected(format!(
                "class {:?} is not of the form {{v_(i,j), v_(4-i,j)}}",
                self.named(class)
            )));
        }
        let (i, j) = self.labels().coords(members[0]);
        let j = j as isize;
        if self.script == Script::C5c3 {
            // the C5 □ C5 probe ties v_{x,j} with v_{x,j±1} on three rows;
            // this diagonal probe separates N[O_1] for every class
            let u = i.min(4 - i) as isize;
            return Ok(vec![self.v(3 + u, j), self.v(4 - u, j + 1)]);
        }
        Ok(vec![self.v(4, j + 1), self.v(2, j + 1)])
    }

    /// Axis pairs at distance one or two, then diagonal pairs.
    fn pair_probe_odd(&self, ctx: &TurnContext<'_>, class: VertexSet) -> Result<Vec<usize>> {
        let l = self.labels();
        let p = self.p as isize;
        if let Some((x, y)) = match_offset(l, class, 1, 0) {
            return Ok(vec![self.v(x - 1, y + 1), self.v(x, y)]);
        }
        if p >= 2 {
            if let Some((x, y)) = match_offset(l, class, 2, 0) {
                return Ok(vec![self.v(x + 1, y + 1), self.v(x, y)]);
            }
        }
        if let Some((x, y)) = match_offset(l, class, 0, -2) {
            return Ok(vec![self.v(x, y), self.v(x - 1, y + 1)]);
        }
        if let Some((x, y)) = match_offset(l, class, 1, 1) {
            return Ok(if p >= 2 {
                vec![self.v(x - p + 1, y), self.v(x - p, y - 1)]
            } else {
                vec![self.v(x - 1, y), self.v(x, y - 1)]
            });
        }
        if let Some((x, y)) = match_offset(l, class, 1, -1) {
            return Ok(if p >= 2 {
                vec![self.v(x - p + 1, y), self.v(x - p, y + 1)]
            } else {
                vec![self.v(x - 1, y), self.v(x, y + 1)]
            });
        }
        Err(ctx.unexpected(format!("class {:?} is neither an axis nor a diagonal pair", self.named(class))))
    }

    fn pair_probe_c6(&self, ctx: &TurnContext<'_>, class: VertexSet) -> Result<Vec<usize>> {
        let l = self.labels();
        if let Some((x, y)) = match_offset(l, class, 2, 0) {
            return Ok(vec![self.v(x + 1, y + 1), self.v(x, y)]);
        }
        if let Some((x, y)) = match_offset(l, class, 0, -2) {
            return Ok(vec![self.v(x, y), self.v(x - 1, y + 1)]);
        }
        if let Some((x, y)) = match_offset(l, class, -1, -1) {
            return Ok(vec![self.v(x + 1, y + 1), self.v(x + 1, y - 2)]);
        }
        if let Some((x, y)) = match_offset(l, class, 1, -1) {
            return Ok(vec![self.v(x - 1, y + 1), self.v(x - 1, y - 2)]);
        }
        Err(ctx.unexpected(format!("class {:?} is not a scripted pair", self.named(class))))
    }

    fn even_even_probe(&self, ctx: &TurnContext<'_>, class: VertexSet) -> Result<Vec<usize>> {
        let form = self.fit(ctx, class)?;
        let (p, q) = (self.p, self.q);
        if form.d_i + 2 <= p && form.d_j + 2 <= q {
            let (a, b) = (form.a as isize, form.b as isize);
            let (p, q) = (p as isize, q as isize);
            return Ok(vec![self.v(a - 1 + p, b - 1 + q), self.v(a - 1 + p, b - 1)]);
        }
        if ctx.turn == 2 {
            return Ok(self.translated(form));
        }
        Err(ctx.unexpected(format!("rectangle {form:?} is too wide after turn 2")))
    }
}

impl CopStrategy for TorusScript {
    fn name(&self) -> String {
        match self.script {
            Script::C5c5 => "c5c5".into(),
            Script::C5c3 => "c5c3".into(),
            Script::OddEven => format!("odd_even(p={}, q={})", self.p, self.q),
            Script::EvenEven => format!("even_even(p={}, q={})", self.p, self.q),
            Script::C2pC6 => format!("c2p_c6(p={})", self.p),
        }
    }

    fn cop_count(&self) -> usize {
        2
    }

    fn check_board(&self, board: &Board) -> Result<()> {
        let expected = make_torus(self.m, self.n)?;
        let g = board.graph();
        if g.labels() != Some(self.labels()) || g.edges() != expected.edges() {
            return Err(Error::StrategyMismatch(format!(
                "{} is written for C{} □ C{}",
                self.name(),
                self.m,
                self.n
            )));
        }
        Ok(())
    }

    fn next_probe(&self, _board: &Board, ctx: &TurnContext<'_>) -> Result<Vec<usize>> {
        let Some(class) = ctx.previous_class() else {
            return Ok(self.first_probe());
        };
        match self.script {
            Script::C5c5 | Script::C5c3 => {
                if ctx.turn > 2 {
                    return Err(ctx.unexpected("no probe is scripted after turn 2"));
                }
                self.mirror_pair_c5(ctx, class)
            }
            Script::OddEven if ctx.turn == 2 => Ok(self.translated(self.fit(ctx, class)?)),
            Script::OddEven => self.pair_probe_odd(ctx, class),
            Script::EvenEven => self.even_even_probe(ctx, class),
            Script::C2pC6 if ctx.turn == 2 => Ok(self.translated(self.fit(ctx, class)?)),
            Script::C2pC6 => self.pair_probe_c6(ctx, class),
        }
    }
}
