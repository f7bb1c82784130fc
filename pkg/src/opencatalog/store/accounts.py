"""Contributor and curator accounts with bearer tokens.

Backed by ``data/accounts.json``; passwords stored as salted PBKDF2
hashes, tokens compared in constant time.
"""

from __future__ import annotations

import hashlib
import hmac
import json
import secrets
from dataclasses import dataclass
from pathlib import Path

ROLES = ("contributor", "curator")

_PBKDF2_ITERATIONS = 100_000


class AccountError(ValueError):
    pass


@dataclass
class Account:
    id: str
    role: str
    token: str | None = None
    password_hash: str | None = None


def hash_password(password: str, salt: bytes | None = None) -> str:
    salt = salt if salt is not None else secrets.token_bytes(16)
    digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, _PBKDF2_ITERATIONS)
    return f"pbkdf2-sha256${_PBKDF2_ITERATIONS}${salt.hex()}${digest.hex()}"


def verify_password(password: str, stored: str) -> bool:
    try:
        _, iterations, salt_hex, digest_hex = stored.split("$")
        digest = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"), bytes.fromhex(salt_hex), int(iterations)
        )
        return hmac.compare_digest(digest.hex(), digest_hex)
    except (ValueError, TypeError):
        return False


class AccountRegistry:
    def __init__(self, path: Path | str):
        self.path = Path(path)
        self._cache: dict[str, Account] | None = None
        self._cached_mtime: float | None = None

    def _load(self) -> dict[str, Account]:
        if not self.path.exists():
            self._cache, self._cached_mtime = {}, None
            return {}
        mtime = self.path.stat().st_mtime_ns
        if self._cache is not None and mtime == self._cached_mtime:
            return self._cache
        raw = json.loads(self.path.read_text("utf-8"))
        accounts = {}
        for item in raw.get("accounts", []):
            account = Account(
                id=item["id"],
                role=item.get("role", "contributor"),
                token=item.get("token"),
                password_hash=item.get("password_hash"),
            )
            if account.role not in ROLES:
                raise AccountError(f"account {account.id!r}: unknown role {account.role!r}")
            accounts[account.id] = account
        self._cache, self._cached_mtime = accounts, mtime
        return accounts

    def _write(self, accounts: dict[str, Account]) -> None:
        doc = {
            "accounts": [
                {
                    k: v
                    for k, v in (
                        ("id", a.id),
                        ("role", a.role),
                        ("token", a.token),
                        ("password_hash", a.password_hash),
                    )
                    if v is not None
                }
                for a in sorted(accounts.values(), key=lambda a: a.id)
            ]
        }
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", "utf-8")
        self._cache = None

    def get(self, account_id: str) -> Account | None:
        return self._load().get(account_id)

    def by_token(self, token: str) -> Account | None:
        if not token:
            return None
        for account in self._load().values():
            if account.token and hmac.compare_digest(account.token, token):
                return account
        return None

    def add(
        self,
        account_id: str,
        role: str = "contributor",
        *,
        password: str | None = None,
        token: str | None = None,
    ) -> Account:
        if role not in ROLES:
            raise AccountError(f"unknown role {role!r}")
        accounts = dict(self._load())
        account = Account(
            id=account_id,
            role=role,
            token=token,
            password_hash=hash_password(password) if password else None,
        )
        accounts[account_id] = account
        self._write(accounts)
        return account

    def check_password(self, account_id: str, password: str) -> bool:
        account = self.get(account_id)
        return bool(account and account.password_hash and verify_password(password, account.password_hash))
