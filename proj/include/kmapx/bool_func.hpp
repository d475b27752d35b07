/*!
  \file bool_func.hpp
  \brief Single-output boolean functions as ON/DC minterm sets

  Functions are immutable after construction and safe to share between
  threads. Text ingestion covers a single-output Berkeley-PLA subset and a
  minterm-list format ("vars=4; on=5,9,13; dc=;").
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kmapx/common.hpp"

namespace kmapx
{

enum class truth_value
{
  zero,
  one,
  dc
};

class bool_func
{
public:
  bool_func() = default;

  bool_func( int var_count, uint64_t on_mask, uint64_t dc_mask,
             std::vector<std::string> var_names = {} );

  static bool_func from_minterms( int var_count, const std::vector<int>& on,
                                  const std::vector<int>& dc = {},
                                  std::vector<std::string> var_names = {} );

  int var_count() const { return var_count_; }
  uint64_t on_mask() const { return on_; }
  uint64_t dc_mask() const { return dc_; }
  uint64_t off_mask() const { return full_cell_mask( var_count_ ) & ~on_ & ~dc_; }

  int on_count() const;
  int dc_count() const;

  truth_value value_at( int minterm ) const;

  std::vector<int> on_minterms() const;
  std::vector<int> dc_minterms() const;

  const std::vector<std::string>& var_names() const { return var_names_; }

  bool operator==( const bool_func& ) const = default;

private:
  uint8_t var_count_ = 1;
  uint64_t on_ = 0;
  uint64_t dc_ = 0;
  std::vector<std::string> var_names_{ "a" };
};

/*! \brief "a","b","c","d" for var_count <= 4, otherwise "x1".."xn". */
std::vector<std::string> default_var_names( int var_count );

/*! \brief Parse a single-output PLA (.i/.o headers, cube lines, '#' comments, '.e'). */
bool_func parse_pla( std::string_view text );

std::string to_pla( const bool_func& f );

/*! \brief Parse the minterm-list form "vars=4; on=5,9,13; dc=;". */
bool_func parse_minterm_list( std::string_view text );

std::string to_minterm_list( const bool_func& f );

} // namespace kmapx
