#pragma once

#include <stdexcept>
#include <string>

namespace bouquet {

// CLI exit-code categories: input_error -> 2, numeric_error -> 3.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_in_x_error : public input_error {
public:
    using input_error::input_error;
};

class target_below_minimum_error : public input_error {
public:
    using input_error::input_error;
};

class budget_exhausted_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

class potential_below_minimum_error : public input_error {
public:
    using input_error::input_error;
};

class branch_collapse_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

class divergent_potential_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

} // namespace bouquet
