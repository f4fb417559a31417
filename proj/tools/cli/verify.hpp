#pragma once

#include <string>
#include <vector>

#include "pzeta/precision.hpp"
#include "pzeta/sieve.hpp"
#include "pzeta/stieltjes.hpp"

namespace pzeta::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  Real residual;
  Real tolerance;
  bool pass = false;
};

struct VerifyInputs {
  PrecisionPolicy policy;
  StieltjesTable stieltjes;
  // Raw text of the data the table was parsed from; the checksum check runs
  // only for the bundled copy.
  bool bundled = true;
  std::string data_text;
  const PrimeSieve* sieve = nullptr;
  unsigned threads = 1;
};

std::vector<Check> run_verify(const VerifyInputs& in);

// "check,expected,actual,residual,tolerance,pass"
std::string verify_csv(const std::vector<Check>& checks);

}  // namespace pzeta::cli
