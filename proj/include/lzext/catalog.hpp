#pragma once

#include <string>
#include <vector>

#include "lzext/complex.hpp"
#include "lzext/lz.hpp"

namespace lzext {

/* A named chain as displayed (raw, possibly inadmissible) and its normal form. */
struct CatalogEntry {
    std::string family;
    std::string name;
    Bidegree bidegree;
    ChainElement raw;
    ChainElement cycle;
    std::vector<int> params;
};

/* P0 (Sq0 at p = 2) on raw words, without Adem rewriting. */
ChainElement raw_power(const Complex& cx, const ChainElement& raw, int times = 1);

/* Builds an entry from the text grammar, applying raw_power `power` times. */
CatalogEntry make_entry(const Complex& cx, std::string family, std::string name, const std::string& text,
                        int power = 0);

/* Ext^0(P) generators hhat_i and hhat_i(k) with t <= tmax; odd p. */
std::vector<CatalogEntry> ext0_generators(const Complex& cx, int tmax);

/* The nine displayed families of Ext^1(P) with t <= tmax; odd p. Family names:
 * a0hhat, a0hhat(k), ahat, hhhat(1), hhhat, hhhat(k), dhat, khat, phat. */
std::vector<CatalogEntry> ext1_families(const Complex& cx, int tmax);

/* Decomposable products of Ext^0 and Ext^1 classes that vanish in Ext^1(P). */
std::vector<CatalogEntry> ext1_relations(const Complex& cx, int tmax);

/* Expected image of a catalog class of Ext^1(P) under phi_1, by family name;
 * empty when the image should vanish. */
QElement ext1_expected_image(const DyerLashof& dl, const CatalogEntry& e);

enum class Mechanism { Excess, Relation, ExcessAndRelation, NonZero };
std::string to_string(Mechanism m);
bool mechanism_matches(Mechanism m, const LZEvaluation& factor_eval);

/* One of the 23 spanning families of Ext^3(F_p). `factors` are the chains whose
 * vanishing image the argument relies on: the whole word, a two-letter prefix or
 * suffix, or the seed of a power family. */
struct RankThreeFamily {
    int number = 0;
    std::string name;
    int prime = 3;
    Mechanism mechanism = Mechanism::Excess;
    std::vector<ChainElement> factors;
    std::vector<CatalogEntry> instances;
};

/* The lowest max_instances instances with t <= tmax, over the trivial module.
 * Families restricted to p = 3 or p != 3 are omitted at the other primes. */
std::vector<RankThreeFamily> rank3_families(const Complex& cx, int tmax, int max_instances = 3);

/* The sum appearing in L_i, before P0: sum_j (-1)^{j+1}/j l1_{p-j-1} l1_{j-1}. */
std::string l_text(int p);
std::string m_text(int p);
std::string n_text(int p);

/* p = 2 cycles with the chain factor responsible for their vanishing image. */
struct VanishingCycle {
    CatalogEntry entry;
    Mechanism mechanism;
    ChainElement factor;
};
/* U0 over F_2. */
VanishingCycle u0_cycle(const Complex& f2);
/* cbar_0, alphabar_16(0), gammabar_63(0) over P at p = 2. */
std::vector<VanishingCycle> p2_module_cycles(const Complex& p2);

/* bQ^{p-1} b[1] + Q^{p-1} a in the dual Singer construction of P. */
QElement cokernel_witness(const Complex& cx);

}  // namespace lzext
