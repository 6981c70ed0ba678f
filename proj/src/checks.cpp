// placeholder; check registry lands here
namespace symplift::checks_anchor { int anchor = 0; }
