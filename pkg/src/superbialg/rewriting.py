"""Noncommutative word rewriting with exact scalar coefficients.

Elements are linear combinations of words (tuples of generator names);
rules send a single word to an element.  Rule sets are expected to be
terminating (each right-hand word strictly below the left-hand side in the
degree-lexicographic order induced by the generator list); confluence on a
given set is established by exhaustive critical-pair resolution.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .scalars import is_zero_expr

__all__ = ["Rule", "RewriteSystem", "word_key"]

Word = tuple


def word_key(order: dict, word: Word, weights: dict | None = None):
    if weights is None:
        total = len(word)
    else:
        total = sum(weights.get(g, 1) for g in word)
    return (total, len(word), tuple(order[g] for g in word))


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: tuple  # tuple of (word, coeff)


class RewriteSystem:
    """Rules must strictly decrease the weighted degree-lexicographic word
    order (weights default to 1); this is verified at construction time and
    guarantees termination."""

    def __init__(self, generators, rules, normalize=None, weights=None, max_steps=200000):
        self.generators = tuple(generators)
        self.order = {g: i for i, g in enumerate(self.generators)}
        self.weights = dict(weights or {})
        self.rules = [Rule(tuple(l), tuple((tuple(w), sp.sympify(c)) for w, c in r)) for l, r in rules]
        self.normalize = normalize or (lambda e: e)
        self.max_steps = max_steps
        for rule in self.rules:
            key = word_key(self.order, rule.lhs, self.weights)
            for w, _ in rule.rhs:
                if word_key(self.order, w, self.weights) >= key:
                    raise ValueError(
                        f"rule {rule.lhs} -> {w} does not decrease the word order"
                    )

    # -- elements ------------------------------------------------------------

    def element(self, terms) -> dict:
        out: dict = {}
        for w, c in (terms.items() if isinstance(terms, dict) else terms):
            c = self.normalize(sp.sympify(c))
            if not is_zero_expr(c):
                out[tuple(w)] = out.get(tuple(w), sp.S.Zero) + c
        return {w: c for w, c in out.items() if not is_zero_expr(c)}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for w, c in b.items():
            out[w] = out.get(w, sp.S.Zero) + c
        return {
            w: self.normalize(c)
            for w, c in out.items()
            if not is_zero_expr(self.normalize(c))
        }

    def scale(self, a: dict, c) -> dict:
        c = sp.sympify(c)
        if is_zero_expr(c):
            return {}
        out = {}
        for w, v in a.items():
            nv = self.normalize(c * v)
            if not is_zero_expr(nv):
                out[w] = nv
        return out

    def concat(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                w = w1 + w2
                out[w] = out.get(w, sp.S.Zero) + c1 * c2
        return out

    def mul(self, a: dict, b: dict) -> dict:
        return self.normal_form(self.concat(a, b))

    # -- reduction ------------------------------------------------------------

    def _find_redex(self, word: Word):
        for pos in range(len(word)):
            for ridx, rule in enumerate(self.rules):
                L = len(rule.lhs)
                if word[pos : pos + L] == rule.lhs:
                    return pos, ridx
        return None

    def normal_form(self, element) -> dict:
        if not isinstance(element, dict):
            element = self.element(element)
        out: dict = {}
        work = [(w, c) for w, c in element.items()]
        steps = 0
        while work:
            steps += 1
            if steps > self.max_steps:
                raise RuntimeError("rewriting did not terminate within the step budget")
            word, coeff = work.pop()
            hit = self._find_redex(word)
            if hit is None:
                out[word] = out.get(word, sp.S.Zero) + coeff
                continue
            pos, ridx = hit
            rule = self.rules[ridx]
            prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
            for w, c in rule.rhs:
                nc = self.normalize(coeff * c)
                if not is_zero_expr(nc):
                    work.append((prefix + w + suffix, nc))
        return {
            w: self.normalize(c)
            for w, c in out.items()
            if not is_zero_expr(self.normalize(c))
        }

    def reduces_to_zero(self, element) -> bool:
        return not self.normal_form(element)

    def eq(self, a, b) -> bool:
        diff = self.add(self.normal_form(a), self.scale(self.normal_form(b), -1))
        return not diff

    # -- confluence -------------------------------------------------------------

    def critical_pairs(self):
        """All overlap superpositions of rule left-hand sides, each reduced
        both ways; `resolved` means the normal forms agree."""
        pairs = []
        for i, r1 in enumerate(self.rules):
            for j, r2 in enumerate(self.rules):
                l1, l2 = r1.lhs, r2.lhs
                # proper overlap: suffix of l1 == prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        word = l1 + l2[k:]
                        a = self.normal_form({w + l2[k:]: c for w, c in r1.rhs})
                        b = self.normal_form({l1[:-k] + w: c for w, c in r2.rhs})
                        pairs.append(
                            {
                                "rules": (i, j),
                                "word": word,
                                "resolved": self.eq(a, b),
                            }
                        )
                # containment: l2 inside l1 (proper)
                if len(l2) < len(l1):
                    for pos in range(len(l1) - len(l2) + 1):
                        if l1[pos : pos + len(l2)] == l2:
                            a = self.normal_form(dict(r1.rhs))
                            b = self.normal_form(
                                {l1[:pos] + w + l1[pos + len(l2) :]: c for w, c in r2.rhs}
                            )
                            pairs.append(
                                {
                                    "rules": (i, j),
                                    "word": l1,
                                    "resolved": self.eq(a, b),
                                }
                            )
        return pairs

    def confluent(self) -> bool:
        return all(p["resolved"] for p in self.critical_pairs())
