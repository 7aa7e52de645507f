"""Exceptions raised by paract.

DomainError: the input is well-formed but the requested construction does not apply (exit code 1).
InputError: the input itself is malformed (exit code 2).
"""


class ParactError(ValueError):
    exit_code = 1


class DomainError(ParactError):
    exit_code = 1


class InputError(ParactError):
    exit_code = 2


"""Group axioms"""
class GroupAxiomError(DomainError): ...
class NonAssociative(GroupAxiomError): ...
class NoIdentityAtZero(GroupAxiomError): ...
class MissingInverse(GroupAxiomError): ...
class NotLatinSquare(GroupAxiomError): ...


"""Subgroups"""
class NotASubgroup(DomainError): ...
class NotNormal(DomainError): ...
class NotNested(DomainError): ...
class GroupMismatch(DomainError): ...
class InvalidChain(DomainError): ...


"""Actions and their quotients"""
class InvalidPartialAction(DomainError): ...
class NotFree(DomainError): ...
class EmptySubset(DomainError): ...
class RNotEquivalence(DomainError): ...
class ImageNotInIota(DomainError): ...
class NotASection(DomainError): ...
class TooLarge(DomainError): ...


"""Input"""
class SchemaError(InputError): ...
class UnknownGroup(InputError): ...
class UnknownFixture(InputError): ...
class BadParams(InputError): ...
