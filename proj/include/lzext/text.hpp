#pragma once

#include <string>
#include <string_view>

#include "lzext/complex.hpp"
#include "lzext/lambda.hpp"

namespace lzext {

/* Parse failure; position is a 0-based offset into the input. */
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

/* Words in the generators are written l1_2, l0_-1 (odd p) and l_3 (p = 2);
 * terms are [c*]word joined by + and -. The empty word is 1. */
LambdaElement parse_lambda_raw(const LambdaAlgebra& alg, std::string_view text);
LambdaElement parse_lambda(const LambdaAlgebra& alg, std::string_view text);
std::string format_monomial(const LambdaAlgebra& alg, const Monomial& m);
std::string format_lambda(const LambdaAlgebra& alg, const LambdaElement& e);

/* Module tokens: a, ab[t], b[t]. A chain term is [c*]word|module, or a bare module
 * token when the word is empty. Over Fp the module token is omitted. */
ChainElement parse_chain_raw(const Complex& cx, std::string_view text);
ChainElement parse_chain(const Complex& cx, std::string_view text);
std::string format_module(const RightModule& mod, const ModuleBasis& h);
std::string format_chain(const Complex& cx, const ChainElement& c);

/* Dyer-Lashof words: bQ[i] Q[j] ..., with the module token after |. */
std::string format_q_monomial(const LambdaAlgebra& alg, const Monomial& m);
std::string format_q(const Complex& cx, const ChainElement& q);
ChainElement parse_q_raw(const Complex& cx, std::string_view text);

}  // namespace lzext
